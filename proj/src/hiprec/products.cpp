#include "hypint/hiprec/products.hpp"

#include <stdexcept>

#include "hypint/errors.hpp"
#include "hypint/exact/numbers.hpp"
#include "hypint/hiprec/gamma.hpp"
#include "hypint/hiprec/zeta.hpp"

namespace hypint {

Real bernoulli_poly(unsigned n, const Real& z) {
  Real acc(z.prec());
  for (unsigned k = 0; k <= n; ++k) {
    acc = acc * z + Real(BigRational(binomial(n, k)) * bernoulli(k), z.prec());
  }
  return acc;
}

Real adamchik_psi_integral(int n, const Real& z_in, const PrecisionContext& ctx) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (z_in.sign() <= 0) throw DomainError("upper limit must be positive");
  const PrecisionContext wide = ctx.widened(16);
  const mpfr_prec_t p = wide.working();
  const Real z = z_in.rounded(p);
  if (n == 0) return log_gamma(z, ctx);

  const unsigned un = static_cast<unsigned>(n);
  Real result = zeta_sderiv(Real(-static_cast<long>(n), p), wide);
  if (n % 2 == 0) result = -result;
  result += Real(BigRational(sign_pow(n)) / BigRational(n + 1) * bernoulli(un + 1) * harmonic(un), p);
  for (unsigned k = 0; k <= un; ++k) {
    const Real zk = pow(z, static_cast<long>(un - k)) * Real(binomial(un, k), p);
    const Real signed_zk = (k % 2 == 0) ? zk : -zk;
    const Real bern = bernoulli_poly(k + 1, z) * Real(harmonic(k) / BigRational(k + 1), p);
    result -= signed_zk * bern;
    result += signed_zk * hurwitz_zeta_sderiv(Real(-static_cast<long>(k), p), z, wide);
  }
  return result.rounded(ctx.working());
}

Real f_product_partial(const Real& s_in, long terms, const PrecisionContext& ctx) {
  if (s_in.sign() <= 0) throw DomainError("s must be positive");
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");
  const mpfr_prec_t p = ctx.working() + 16;
  const Real s = s_in.rounded(p);
  const Real quarter = ldexp(Real(1L, p), -2);
  const Real half = ldexp(Real(1L, p), -1);
  Real sum(p);
  for (long k = 0; k < terms; ++k) {
    const Real t = s + k;
    // log(t/(t+1/2)) = -log1p(1/(2t)) keeps full relative accuracy for large t.
    sum += half - (t + quarter) * log1p(half / t);
  }
  return sum.rounded(ctx.working());
}

Real f_closed(const Real& s_in, const PrecisionContext& ctx) {
  if (s_in.sign() <= 0) throw DomainError("s must be positive");
  const PrecisionContext wide = ctx.widened(16);
  const mpfr_prec_t p = wide.working();
  const Real s = s_in.rounded(p);
  const Real m1(-1L, p);
  const Real half = ldexp(Real(1L, p), -1);
  const Real log2 = const_log2(p);
  Real r = hurwitz_zeta_sderiv(m1, s + half, wide) - hurwitz_zeta_sderiv(m1, s, wide);
  r += ldexp(log(s) - log_gamma(s * 2L + 1L, wide), -2);
  r += ldexp((log2 - 1L) * s, -1);
  r += ldexp(log2, -2) + ldexp(log(const_pi(p)), -3) + Real(0.125, p);
  return r.rounded(ctx.working());
}

}  // namespace hypint
