#include "hypint/closed/integral_spec.hpp"

#include <sstream>

#include "hypint/errors.hpp"

namespace hypint {

IntegralSpec::IntegralSpec(int n, int k, Real l, Real t)
    : n_(n), k_(k), l_(std::move(l)), t_(std::move(t)) {
  if (n_ < 0 || k_ < 0) throw DomainError("IntegralSpec: N and K must be nonnegative");
  if (l_.sign() < 0 || t_.sign() < 0) throw DomainError("IntegralSpec: L and T must be nonnegative");
  if (!converges(n_, k_, l_, t_)) throw DivergentInput("IntegralSpec: divergent integral " + describe());
}

bool IntegralSpec::converges(int n, int /*k*/, const Real& l, const Real& t) {
  // At the origin every factor is bounded; at infinity only sech^L e^{-Tx}
  // or a 1/x^N with N >= 2 gives decay.
  return l.sign() > 0 || t.sign() > 0 || n >= 2;
}

Integrand IntegralSpec::integrand(const PrecisionContext& ctx) const {
  const mpfr_prec_t wp = ctx.working();
  const Real l = l_.rounded(wp);
  const Real t = t_.rounded(wp);
  const bool integer_l = l.is_integer();
  const long li = l.to_long();
  return [n = n_, k = k_, l, t, integer_l, li](const Real& x) {
    const Real th = tanh(x);
    Real v = Real(1L, x.prec());
    if (n > 0) v = pow(th / x, static_cast<long>(n));
    if (k > 0) v *= pow(th, static_cast<long>(k));
    if (!l.is_zero()) v *= integer_l ? pow(sech(x), li) : pow(sech(x), l);
    if (!t.is_zero()) v *= exp(-(t * x));
    return v;
  };
}

QuadratureResult IntegralSpec::integrate(const PrecisionContext& ctx,
                                         const QuadratureOptions& opts) const {
  return integrate_semi_infinite(integrand(ctx), ctx, opts);
}

std::string IntegralSpec::describe() const {
  std::ostringstream out;
  out << "(N=" << n_ << ", K=" << k_ << ", L=" << l_.to_string(12) << ", T=" << t_.to_string(12)
      << ")";
  return out.str();
}

}  // namespace hypint
