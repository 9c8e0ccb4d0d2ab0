#include "hypint/hiprec/gamma.hpp"

#include <cmath>

#include "hypint/errors.hpp"
#include "hypint/exact/numbers.hpp"
#include "hypint/hiprec/zeta.hpp"

namespace hypint {

namespace {

void require_positive(const Real& z) {
  if (z.sign() <= 0) throw DomainError("argument must be positive");
}

// Shift so the asymptotic series reaches 2^-p before its terms start growing.
long shift_for(const Real& z, mpfr_prec_t p) {
  const double target = 0.16 * static_cast<double>(p) + 8;
  const double zd = z.to_double();
  return zd >= target ? 0 : static_cast<long>(std::ceil(target - zd));
}

}  // namespace

Real log_gamma(const Real& z_in, const PrecisionContext& ctx) {
  require_positive(z_in);
  const mpfr_prec_t wp = ctx.working();
  const mpfr_prec_t p = wp + 16 + static_cast<mpfr_prec_t>(std::log2(1 + std::fabs(z_in.to_double())));
  const Real z = z_in.rounded(p);
  const long m = shift_for(z, p);

  Real prod(1L, p);
  for (long i = 0; i < m; ++i) prod *= z + i;
  const Real x = z + m;

  const Real lx = log(x);
  Real sum = (x - Real(0.5, p)) * lx - x + ldexp(log(const_pi(p) * 2L), -1);
  const Real eps = ldexp(abs(sum) + 1L, -static_cast<long>(p));
  const Real inv_x2 = 1L / (x * x);
  Real xp = 1L / x;
  for (unsigned j = 1;; ++j) {
    const BigRational c = bernoulli(2 * j) / BigRational(static_cast<long>(2 * j) * (2 * j - 1));
    const Real term = Real(c, p) * xp;
    sum += term;
    if (abs(term) <= eps) break;
    if (j > 4 * static_cast<unsigned>(p)) throw NoConvergence("log_gamma series");
    xp *= inv_x2;
  }
  return (sum - log(prod)).rounded(wp);
}

Real digamma(const Real& z_in, const PrecisionContext& ctx) {
  require_positive(z_in);
  const mpfr_prec_t wp = ctx.working();
  const mpfr_prec_t p = wp + 16;
  const Real z = z_in.rounded(p);
  const long m = shift_for(z, p);

  Real shift(p);
  for (long i = 0; i < m; ++i) shift += 1L / (z + i);
  const Real x = z + m;

  Real sum = log(x) - 1L / (x * 2L);
  const Real eps = ldexp(abs(sum) + 1L, -static_cast<long>(p));
  const Real inv_x2 = 1L / (x * x);
  Real xp = inv_x2;
  for (unsigned j = 1;; ++j) {
    const BigRational c = bernoulli(2 * j) / BigRational(static_cast<long>(2 * j));
    const Real term = Real(c, p) * xp;
    sum -= term;
    if (abs(term) <= eps) break;
    if (j > 4 * static_cast<unsigned>(p)) throw NoConvergence("digamma series");
    xp *= inv_x2;
  }
  return (sum - shift).rounded(wp);
}

Real polygamma(int m, const Real& z, const PrecisionContext& ctx) {
  if (m < 1) throw std::invalid_argument("polygamma order must be >= 1");
  require_positive(z);
  const mpfr_prec_t wp = ctx.working();
  Real r = Real(factorial(static_cast<unsigned>(m)), wp) *
           hurwitz_zeta(Real(static_cast<long>(m) + 1, wp), z, ctx);
  return (m % 2 == 1) ? r : -r;
}

Real gamma_one_minus(const Real& s, const PrecisionContext& ctx) {
  require_positive(s);
  if (s.is_integer()) throw PoleError("Gamma(1 - s) has a pole at positive integer s");
  const mpfr_prec_t wp = ctx.working();
  const Real pi = const_pi(wp + 16);
  const Real sw = s.rounded(wp + 16);
  return (pi / (sin(pi * sw) * exp(log_gamma(sw, ctx.widened(16))))).rounded(wp);
}

Real euler_gamma(const PrecisionContext& ctx) { return const_euler(ctx.working()); }

}  // namespace hypint
