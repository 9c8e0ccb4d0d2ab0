#include "hypint/identity/functional.hpp"

#include <string>

#include "hypint/closed/tanh_over_x.hpp"
#include "hypint/errors.hpp"
#include "hypint/hiprec/polylog.hpp"
#include "hypint/hiprec/zeta.hpp"

namespace hypint {

namespace {

// Coefficients of p((n - 1)/2) (odd) or p(n) in powers of n.
std::vector<BigRational> in_powers_of_n(const std::vector<BigRational>& p, bool odd) {
  if (!odd) return p;
  std::vector<BigRational> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    // ((n - 1)/2)^i = 2^-i sum_m C(i, m) n^m (-1)^{i-m}
    for (std::size_t m = 0; m <= i; ++m) {
      out[m] += p[i] * pow2(-static_cast<long>(i)) *
                BigRational(binomial(static_cast<unsigned>(i), static_cast<unsigned>(m))) *
                sign_pow(static_cast<long>(i - m));
    }
  }
  return out;
}

// f(sigma) for the j-th coefficient: beta(sigma), or -eta(sigma) which is
// (2^{1-sigma} - 1) zeta(sigma) and stays finite at sigma = 1.
Real side_function(bool beta_side, const Real& sigma, const PrecisionContext& ctx) {
  return beta_side ? dirichlet_beta(sigma, ctx) : -dirichlet_eta(sigma, ctx);
}

}  // namespace

FunctionalEquation functional_equation(int id) {
  if (id < 1 || id > 8) throw UnsupportedParameter("functional equation id must be 1..8");
  FunctionalEquation fe;
  fe.id = id;
  fe.l = (id + 1) / 2;
  fe.parity = (id + 1) % 2;
  const IntegerTForm form = integer_t_form(fe.l, fe.parity);
  fe.beta_side = form.odd_args;
  fe.log_poly = form.log_poly;
  fe.coefficients.assign(static_cast<std::size_t>(fe.l) + 1, ConstantCombination{});
  // sum_k (-1)^k n^m / n^{s+L} = f(s + L - m)
  for (const auto& [basis, poly] : form.terms) {
    const auto c = in_powers_of_n(poly, fe.beta_side);
    for (std::size_t m = 0; m < c.size(); ++m) {
      if (c[m] == 0) continue;
      if (static_cast<int>(m) > fe.l) throw ConsistencyError("closed form degree exceeds L");
      fe.coefficients[static_cast<std::size_t>(fe.l) - m].add(basis, c[m]);
    }
  }
  return fe;
}

QuadratureResult functional_lhs(int id, const Real& s_in, const PrecisionContext& ctx) {
  const FunctionalEquation fe = functional_equation(id);
  if (s_in.sign() <= 0) throw DomainError("functional equations need s > 0");
  const mpfr_prec_t wp = ctx.working();
  const Real s = s_in.rounded(wp);
  const Real order = s + static_cast<long>(fe.l);
  const Real inv2 = pow(Real(2L, wp), -order);
  const Real clamp = ldexp(Real(1L, wp), -static_cast<long>(ctx.bits));
  const int l = fe.l;
  const bool beta = fe.beta_side;
  const bool shifted = fe.parity == 0;  // T = 2k: e^{x} (beta) or no shift (zeta)
  // Polylog caches are not thread-safe; each integrand owns its own.
  auto li = std::make_shared<Polylog>(order, ctx);
  Integrand f = [=](const Real& x_in) {
    const Real x = max(x_in, clamp);
    const Real two_x = 2 * x;
    const Real e2 = exp(-two_x);
    // sech^L e^{+x} = sech^{L-1} 2/(1 + e^{-2x}), sech^L e^{-x} = sech^{L-1} 2e^{-2x}/(1 + e^{-2x})
    Real v = tanh(x) / x * pow(sech(x), static_cast<long>(l - 1));
    Real weight(wp);
    if (beta) {
      // sum over odd n of e^{-nx} / n^{s+L}
      weight = li->at_log(x) - inv2 * li->at_log(two_x);
      v *= shifted ? 2 / (1 + e2) : sech(x);
    } else {
      weight = li->at_log(two_x);
      v *= shifted ? sech(x) : 2 * e2 / (1 + e2);
    }
    return v * weight;
  };
  return integrate_semi_infinite(f, ctx);
}

FunctionalRhs functional_rhs(int id, const Real& s_in, const PrecisionContext& ctx) {
  const FunctionalEquation fe = functional_equation(id);
  if (s_in.sign() <= 0) throw DomainError("functional equations need s > 0");
  const mpfr_prec_t wp = ctx.working();
  const Real s = s_in.rounded(wp);
  Real value(0L, wp);
  for (std::size_t j = 0; j < fe.coefficients.size(); ++j) {
    if (fe.coefficients[j].is_zero()) continue;
    value += fe.coefficients[j].evaluate(ctx) * side_function(fe.beta_side, s + static_cast<long>(j), ctx);
  }

  // The log sums cancel to high relative order; carry extra bits.
  const PrecisionContext wide = ctx.widened(80);
  const mpfr_prec_t xp = wide.working();
  const std::size_t deg = fe.log_poly.size();
  std::vector<Real> q;
  for (const auto& c : fe.log_poly) q.emplace_back(c, xp);
  // A_i(k) = sum_j (-1)^j j^i log a_j over the j range for k.
  std::vector<Real> acc(deg, Real(0L, xp));
  const Real exponent = s.rounded(xp) + static_cast<long>(fe.l);
  const bool odd = fe.beta_side;
  auto push = [&](long j) {
    const Real lg = log(Real(odd ? 2 * j + 1 : j, xp));
    Real jp = sign_pow(j) * lg;
    for (std::size_t i = 0; i < deg; ++i) {
      acc[i] += jp;
      jp *= j;
    }
  };
  SeriesTerm term = [&](long k) {
    // beta side: j < k is complete once j = k - 1 is added; zeta side: j <= k.
    if (odd) {
      if (k > 0) push(k - 1);
    } else {
      push(k);
    }
    // S_k = sum_m q_m sum_i C(m, i) A_i (-k)^{m-i}
    Real sk(0L, xp);
    for (std::size_t m = 0; m < deg; ++m) {
      if (fe.log_poly[m] == 0) continue;
      Real inner(0L, xp);
      Real mk(1L, xp);
      for (std::size_t i = m + 1; i-- > 0;) {
        inner += Real(binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)), xp) * acc[i] * mk;
        mk *= -k;
      }
      sk += q[m] * inner;
    }
    const Real n(odd ? 2 * k + 1 : k, xp);
    return sign_pow(k) * sk / pow(n, exponent);
  };
  SeriesOptions opts;
  opts.decay = Decay::kPowerLaw;
  opts.start = odd ? 0 : 1;
  opts.m0 = 16;
  opts.levels = 13;
  // Non-integer s puts M^-s log M terms in the tail.
  opts.log_terms = 2;
  opts.real_exponents = {s};
  // Never the binding tolerance: the identity check compares against the
  // returned error estimate.
  opts.target = Real(1e-18, xp);
  SeriesResult sr = sum_series(term, wide, opts);
  value += sr.value.rounded(wp);
  return {value, sr.est_error.rounded(wp)};
}

IdentityCase verify_functional_equation(int id, const Real& s, const PrecisionContext& ctx,
                                        const TolerancePolicy& policy) {
  nlohmann::json params = {{"id", id}, {"s", param_value(s)}};
  const std::string name = "func_eq_" + std::to_string(id);
  try {
    const QuadratureResult lhs = functional_lhs(id, s, ctx);
    const FunctionalRhs rhs = functional_rhs(id, s, ctx);
    return make_case(name, params, lhs.value, rhs.value, lhs.est_error + rhs.series_error, ctx,
                     policy);
  } catch (const Error& e) {
    return failed_case(name, params, e.what(), ctx);
  }
}

}  // namespace hypint
