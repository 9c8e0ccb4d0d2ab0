#include "hypint/closed/residuals.hpp"

#include <string>
#include <utility>
#include <vector>

#include "hypint/errors.hpp"

namespace hypint {

namespace {

struct Weighted {
  Real weight;
  IntegralSpec spec;
};

Residual combine(const std::vector<Weighted>& terms, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  Residual r{Real(0L, wp), Real(0L, wp), Real(0L, wp), Real(0L, wp), Real(0L, wp)};
  bool first = true;
  for (const auto& [w, spec] : terms) {
    if (w.is_zero()) {
      first = false;
      continue;
    }
    const QuadratureResult q = spec.integrate(ctx);
    const Real term = w * q.value;
    if (first) {
      r.lhs = term;
    } else {
      r.rhs -= term;
    }
    first = false;
    r.value += term;
    r.oracle_error += abs(w) * q.est_error;
    r.scale = max(r.scale, abs(term));
  }
  r.value = abs(r.value);
  return r;
}

}  // namespace

Residual two_step_recurrence_residual(const Real& l, const Real& t, const PrecisionContext& ctx) {
  if (l.sign() <= 0) throw DomainError("two_step_recurrence_residual: L must be > 0");
  if (t.sign() < 0) throw DomainError("negative T is outside the supported domain");
  const mpfr_prec_t wp = ctx.working();
  const Real lw = l.rounded(wp);
  const Real tw = t.rounded(wp);
  const Real t2 = tw * tw;
  std::vector<Weighted> terms;
  terms.push_back({(lw + 2) * (lw + 3), IntegralSpec(0, 0, lw + 4, tw)});
  terms.push_back({-((lw + 1) * (2 * lw + 3) - t2 + 1), IntegralSpec(0, 0, lw + 2, tw)});
  terms.push_back({-(t2 - lw * lw), IntegralSpec(0, 0, lw, tw)});
  return combine(terms, ctx);
}

Residual partial_integration_residual(const IntegralSpec& spec, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  const int n = spec.n();
  const int k = spec.k();
  const Real l = spec.l().rounded(wp);
  const Real t = spec.t().rounded(wp);
  auto make = [](int n2, int k2, const Real& l2, const Real& t2) {
    if (!IntegralSpec::converges(n2, k2, l2, t2)) {
      throw DivergentInput("partial integration: a term diverges at (N=" + std::to_string(n2) +
                           ", K=" + std::to_string(k2) + ")");
    }
    return IntegralSpec(n2, k2, l2, t2);
  };
  std::vector<Weighted> terms;
  terms.push_back({Real(static_cast<long>(n), wp), make(n + 1, k, l, t)});
  terms.push_back({Real(-static_cast<long>(n + k + 1), wp), make(n, k, l + 2, t)});
  terms.push_back({l, make(n, k + 2, l, t)});
  terms.push_back({t, make(n, k + 1, l, t)});
  return combine(terms, ctx);
}

}  // namespace hypint
