#include "hypint/hiprec/polylog.hpp"

#include <cmath>

#include "hypint/errors.hpp"
#include "hypint/exact/numbers.hpp"
#include "hypint/hiprec/gamma.hpp"
#include "hypint/hiprec/zeta.hpp"

namespace hypint {

namespace {

// zeta(sigma) for any sigma != 1; negative arguments go through the
// functional equation to avoid Euler-Maclaurin cancellation.
Real zeta_any(const Real& sigma, const PrecisionContext& ctx) {
  if (sigma.sign() >= 0) return riemann_zeta(sigma, ctx);
  const mpfr_prec_t wp = ctx.working();
  if (sigma.is_integer() && sigma.to_long() % 2 == 0) return Real(wp);
  const Real pi = const_pi(wp);
  const Real u = 1L - sigma;
  const Real two_pi = pi * 2L;
  // zeta(sigma) = 2 (2 pi)^{sigma-1} sin(pi sigma / 2) Gamma(1 - sigma) zeta(1 - sigma)
  return pow(two_pi, sigma - 1L) * sin(ldexp(pi * sigma, -1)) * exp(log_gamma(u, ctx)) *
         riemann_zeta(u, ctx) * 2L;
}

const Real kSwitch = Real(0.125, 64);

}  // namespace

Polylog::Polylog(const Real& s, const PrecisionContext& ctx)
    : s_(s.rounded(ctx.working() + 16)),
      ctx_(ctx.widened(16)),
      prec_(ctx.working() + 16),
      integer_order_(s.is_integer()),
      gamma_term_(prec_),
      harmonic_term_(prec_),
      inv_factorial_(prec_) {
  if (s.sign() <= 0) throw DomainError("polylog order must be positive");
  if (integer_order_) {
    n_ = s.to_long();
    harmonic_term_ = Real(harmonic(static_cast<unsigned>(n_ - 1)), prec_);
    inv_factorial_ =
        Real(BigRational(1) / BigRational(factorial(static_cast<unsigned>(n_ - 1))), prec_);
  } else {
    gamma_term_ = gamma_one_minus(s_, ctx_);
  }
}

const Real& Polylog::coefficient(std::size_t k) const {
  while (coeffs_.size() <= k) {
    const long kk = static_cast<long>(coeffs_.size());
    if (integer_order_ && kk == n_ - 1) {
      coeffs_.emplace_back(prec_);  // replaced by the log term
      continue;
    }
    const Real z = zeta_any(s_ - kk, ctx_);
    coeffs_.push_back(z / Real(factorial(static_cast<unsigned>(kk)), prec_));
  }
  return coeffs_[k];
}

const Real& Polylog::inv_power(std::size_t k) const {
  while (inv_powers_.size() <= k) {
    const Real kk(static_cast<long>(inv_powers_.size()) + 1, prec_);
    inv_powers_.push_back(integer_order_ ? pow(kk, -n_) : exp(-(s_ * log(kk))));
  }
  return inv_powers_[k];
}

Real Polylog::series(const Real& x_in) const {
  if (x_in.sign() <= 0 || x_in >= 1L) throw DomainError("polylog requires 0 < x < 1");
  const Real x = x_in.rounded(prec_);
  const Real eps = ldexp(Real(1L, 64), -static_cast<long>(prec_));
  Real xp = x;
  Real sum(prec_);
  for (std::size_t k = 0;; ++k) {
    const Real term = xp * inv_power(k);
    sum += term;
    if (term <= eps * sum) break;
    if (k > 1'000'000) throw NoConvergence("polylog series");
    xp *= x;
  }
  return sum.rounded(ctx_.working() - 16);
}

Real Polylog::expansion(const Real& w_in) const {
  if (w_in.sign() <= 0) throw DomainError("polylog requires 0 < x < 1");
  const Real w = w_in.rounded(prec_);
  Real sum(prec_);
  if (integer_order_) {
    sum += pow(-w, n_ - 1) * (harmonic_term_ - log(w)) * inv_factorial_;
  } else {
    sum += gamma_term_ * pow(w, s_ - 1L);
  }
  const Real eps = ldexp(Real(1L, 64), -static_cast<long>(prec_));
  const Real scale = max(abs(sum), Real(1L, 64));
  Real wp(1L, prec_);
  const Real neg_w = -w;
  int small_run = 0;
  for (std::size_t k = 0;; ++k) {
    const Real term = coefficient(k) * wp;
    sum += term;
    small_run = abs(term) <= eps * scale ? small_run + 1 : 0;
    if (small_run >= 2 && static_cast<long>(k) > n_) break;
    if (k > 4 * static_cast<std::size_t>(prec_)) throw NoConvergence("polylog expansion");
    wp *= neg_w;
  }
  return sum.rounded(ctx_.working() - 16);
}

Real Polylog::at_log(const Real& w) const {
  if (w.sign() <= 0) throw DomainError("polylog requires 0 < x < 1");
  if (w >= kSwitch) {
    const Real x = exp(-w.rounded(prec_));
    // Underflow: Li_s(x) ~ x.
    if (x.is_zero()) return Real(ctx_.working() - 16);
    return series(x);
  }
  return expansion(w);
}

Real Polylog::operator()(const Real& x) const {
  if (x.sign() <= 0 || x >= 1L) throw DomainError("polylog requires 0 < x < 1");
  const Real w = -log(x.rounded(prec_));
  if (w >= kSwitch) return series(x);
  return expansion(w);
}

Real polylog(const Real& s, const Real& x, const PrecisionContext& ctx) {
  return Polylog(s, ctx)(x);
}

}  // namespace hypint
