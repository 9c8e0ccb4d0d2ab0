#include "hypint/identity/misc_identities.hpp"

#include <string>
#include <utility>

#include "hypint/closed/integral_spec.hpp"
#include "hypint/closed/recurrence.hpp"
#include "hypint/closed/tanh_over_x.hpp"
#include "hypint/errors.hpp"
#include "hypint/exact/numbers.hpp"
#include "hypint/exact/tables.hpp"
#include "hypint/hiprec/gamma.hpp"
#include "hypint/hiprec/products.hpp"
#include "hypint/hiprec/zeta.hpp"
#include "hypint/oracle/loglog.hpp"
#include "hypint/oracle/quadrature.hpp"
#include "hypint/oracle/series.hpp"

namespace hypint {

namespace {

Real tiny(const PrecisionContext& ctx) {
  return ldexp(Real(1L, ctx.working()), -static_cast<long>(ctx.working()));
}

template <typename F>
IdentityCase guarded(const std::string& id, const nlohmann::json& params, const PrecisionContext& ctx,
                     F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return failed_case(id, params, e.what(), ctx);
  }
}

}  // namespace

SeriesValue limit_sum(int n, const Real& alpha, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("limit_sum: N must be >= 1");
  if (alpha.sign() <= 0) throw DomainError("limit_sum: alpha must be positive");
  const mpfr_prec_t wp = ctx.working();
  const Real a = alpha.rounded(wp);
  SeriesOptions opts;
  opts.decay = Decay::kGeometric;
  opts.start = 1;
  opts.target = tiny(ctx);
  const SeriesResult r = sum_series(
      [&](long k) {
        const Real y = a * k;
        return tanh(y) * pow(sech(y), 2L * n) / k;
      },
      ctx, opts);
  return {r.value, r.est_error};
}

Real limit_value(int n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("limit_value: N must be >= 1");
  const mpfr_prec_t wp = ctx.working();
  const CoeffTable h = h_table(n);
  const Real pi = const_pi(wp);
  Real sum(0L, wp);
  for (int k = 1; k <= n; ++k) {
    const BigRational c = (2 - pow2(-2L * k)) * BigRational(factorial(static_cast<unsigned>(2 * k))) * h.at(n, k);
    sum += Real(c, wp) * riemann_zeta(2L * k + 1, ctx) / pow(pi, 2L * k);
  }
  const BigRational pre = pow2(2L * n) / (BigRational(n * n) * BigRational(binomial(2 * n, n)));
  return Real(pre, wp) * sum;
}

std::vector<IdentityCase> verify_limit_equation(int n, const std::vector<Real>& alphas,
                                                const PrecisionContext& ctx,
                                                const TolerancePolicy& policy) {
  std::vector<IdentityCase> out;
  const mpfr_prec_t wp = ctx.working();
  Real limit(wp);
  try {
    limit = limit_value(n, ctx);
  } catch (const Error& e) {
    out.push_back(failed_case("limit_equation", {{"N", n}}, e.what(), ctx));
    return out;
  }
  const Real pi2 = pow(const_pi(wp), 2L);
  std::vector<std::pair<Real, Real>> gaps;
  for (const Real& alpha : alphas) {
    const nlohmann::json params = {{"N", n}, {"alpha", param_value(alpha)}};
    try {
      const SeriesValue s = limit_sum(n, alpha, ctx);
      const Real lhs = s.value + alpha.rounded(wp) / 2;
      const Real remainder = exp(-pi2 / alpha.rounded(wp));
      gaps.emplace_back(alpha.rounded(wp), limit - s.value);
      if (remainder * 8 >= policy.tolerance(s.error, ctx)) {
        out.push_back(skipped_case("limit_equation", params, lhs, limit,
                                   "outside the asymptotic regime; exp(-pi^2/alpha) above tolerance"));
      } else {
        out.push_back(make_case("limit_equation", params, lhs, limit, s.error, ctx, policy));
      }
    } catch (const Error& e) {
      out.push_back(failed_case("limit_equation", params, e.what(), ctx));
    }
  }
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    const auto& [a0, g0] = gaps[i];
    const auto& [a1, g1] = gaps[i + 1];
    const nlohmann::json params = {{"N", n}, {"alpha", param_value(a0)}, {"alpha_next", param_value(a1)}};
    const Real lhs = g0 / g1;
    const Real rhs = a0 / a1;
    const Real remainder = exp(-pi2 / max(a0, a1)) / min(a0, a1);
    if (remainder * 8 >= policy.tolerance(Real(0L, wp), ctx)) {
      out.push_back(skipped_case("limit_equation_order", params, lhs, rhs,
                                 "outside the asymptotic regime; exp(-pi^2/alpha) above tolerance"));
    } else {
      out.push_back(make_case("limit_equation_order", params, lhs, rhs, Real(0L, wp), ctx, policy));
    }
  }
  return out;
}

std::vector<IdentityCase> verify_polygamma_quarter(int n, const PrecisionContext& ctx,
                                                   const TolerancePolicy& policy) {
  std::vector<IdentityCase> out;
  if (n < 1) {
    out.push_back(failed_case("polygamma_quarter", {{"n", n}}, "n must be >= 1", ctx));
    return out;
  }
  const mpfr_prec_t wp = ctx.working();
  const Real pi = const_pi(wp);
  const Real quarter(make_rational(1, 4), wp);
  const Real three_quarters(make_rational(3, 4), wp);
  const unsigned m = static_cast<unsigned>(2 * n);
  const BigRational b = abs(bernoulli(m));
  const BigRational e = abs(euler_number(m));
  const BigRational fact(factorial(m));

  auto add = [&](int order, const char* z, const Real& at, auto&& rhs_fn) {
    const nlohmann::json params = {{"n", n}, {"order", order}, {"z", z}};
    out.push_back(guarded("polygamma_quarter", params, ctx, [&] {
      const Real lhs = polygamma(order, at, ctx);
      return make_case("polygamma_quarter", params, lhs, rhs_fn(), Real(0L, wp), ctx, policy);
    }));
  };

  const auto odd_rhs = [&](int sign) {
    const Real pre(pow2(2L * (2 * n - 1)) / BigRational(2 * n), wp);
    const Real a = pow(pi, 2L * n) * Real((pow2(2L * n) - 1) * b, wp);
    const Real c = Real(2 * fact, wp) * dirichlet_beta(2L * n, ctx);
    return sign > 0 ? pre * (a + c) : pre * (a - c);
  };
  const auto even_rhs = [&](int sign) {
    const Real pre(pow2(2L * n - 1), wp);
    const Real a = pow(pi, 2L * n + 1) * Real(e, wp);
    const Real c = Real(2 * fact * (pow2(2L * n + 1) - 1), wp) * riemann_zeta(2L * n + 1, ctx);
    return sign > 0 ? pre * (a - c) : pre * (-a - c);
  };
  add(2 * n - 1, "1/4", quarter, [&] { return odd_rhs(1); });
  add(2 * n - 1, "3/4", three_quarters, [&] { return odd_rhs(-1); });
  add(2 * n, "1/4", quarter, [&] { return even_rhs(-1); });
  add(2 * n, "3/4", three_quarters, [&] { return even_rhs(1); });
  return out;
}

namespace {

IdentityCase loglog_case(LogLogKind kind, int n, const PrecisionContext& ctx, const TolerancePolicy& policy) {
  const std::string id = kind == LogLogKind::kBeta ? "loglog_beta" : "loglog_zeta";
  const nlohmann::json params = {{"N", n}};
  return guarded(id, params, ctx, [&] {
    const QuadratureResult q = integrate_loglog(kind, n, ctx);
    return make_case(id, params, q.value, loglog_expected(kind, n, ctx), q.est_error, ctx, policy);
  });
}

}  // namespace

IdentityCase verify_loglog_beta(int n, const PrecisionContext& ctx, const TolerancePolicy& policy) {
  return loglog_case(LogLogKind::kBeta, n, ctx, policy);
}

IdentityCase verify_loglog_zeta(int n, const PrecisionContext& ctx, const TolerancePolicy& policy) {
  return loglog_case(LogLogKind::kZeta, n, ctx, policy);
}

std::vector<IdentityCase> verify_blagouchine(const PrecisionContext& ctx, const TolerancePolicy& policy) {
  const mpfr_prec_t wp = ctx.working();
  const Real pi = const_pi(wp);
  std::vector<IdentityCase> out;
  out.push_back(guarded("blagouchine_beta2", {}, ctx, [&] {
    const QuadratureResult q = blagouchine_beta2(ctx);
    return make_case("blagouchine_beta2", {}, q.value, 2 * dirichlet_beta(2L, ctx) / pi, q.est_error, ctx,
                     policy);
  }));
  out.push_back(guarded("blagouchine_zeta3", {}, ctx, [&] {
    const QuadratureResult q = blagouchine_zeta3(ctx);
    return make_case("blagouchine_zeta3", {}, q.value, 7 * riemann_zeta(3L, ctx) / (8 * pi * pi),
                     q.est_error, ctx, policy);
  }));
  return out;
}

IdentityCase verify_loglog_tanh_sech(const Real& l, const PrecisionContext& ctx, const TolerancePolicy& policy) {
  const nlohmann::json params = {{"L", param_value(l)}};
  return guarded("loglog_tanh_sech", params, ctx, [&] {
    const QuadratureResult q = loglog_tanh_sech(l, ctx);
    Real rhs(ctx.working());
    Real err = q.est_error;
    if (l.is_integer() && l >= Real(1L, 64) && l <= Real(4L, 64)) {
      rhs = tanh_over_x_sech_exp(static_cast<int>(l.to_long()), Real(0L, ctx.working()), ctx);
    } else {
      const QuadratureResult direct = IntegralSpec(1, 0, l, Real(0L, ctx.working())).integrate(ctx);
      rhs = direct.value;
      err += direct.est_error;
    }
    return make_case("loglog_tanh_sech", params, q.value, rhs, err, ctx, policy);
  });
}

std::vector<IdentityCase> verify_products(long terms, double tolerance, const PrecisionContext& ctx,
                                          const TolerancePolicy& policy) {
  const mpfr_prec_t wp = ctx.working();
  const Real tol(tolerance, wp);
  const Real zero(0L, wp);
  const Real pi = const_pi(wp);
  const Real log2 = const_log2(wp);
  std::vector<IdentityCase> out;

  const nlohmann::json tp = {{"terms", terms}};
  out.push_back(guarded("inf_prod_beta_2", tp, ctx, [&] {
    return make_case_with_tolerance("inf_prod_beta_2", tp, infinite_product_beta2(terms, ctx),
                                    dirichlet_beta(2L, ctx), zero, tol);
  }));
  out.push_back(guarded("inf_prod_zetadot_m1", tp, ctx, [&] {
    return make_case_with_tolerance("inf_prod_zetadot_m1", tp, infinite_product_zdot(terms, ctx),
                                    zeta_sderiv(Real(-1L, wp), ctx), zero, tol);
  }));
  for (const BigRational& s : {make_rational(1, 4), make_rational(1, 2), make_rational(1)}) {
    const nlohmann::json params = {{"s", to_string(s)}, {"terms", terms}};
    out.push_back(guarded("f_product_partial", params, ctx, [&] {
      const Real sr(s, wp);
      return make_case_with_tolerance("f_product_partial", params, f_product_partial(sr, terms, ctx),
                                      f_closed(sr, ctx), zero, tol);
    }));
  }
  out.push_back(guarded("f_quarter", {}, ctx, [&] {
    const Real lhs = -f_closed(Real(make_rational(1, 4), wp), ctx);
    const Real rhs = (dirichlet_beta(2L, ctx) - pi / 4 * log2) / (2 * pi);
    return make_case("f_quarter", {}, lhs, rhs, zero, ctx, policy);
  }));
  out.push_back(guarded("f_half", {}, ctx, [&] {
    const Real lhs = f_closed(Real(make_rational(1, 2), wp), ctx);
    const Real zd = zeta_sderiv(Real(-1L, wp), ctx);
    const Real rhs = 3 * (zd - Real(make_rational(1, 12), wp) + 7 * log2 / 36 + log(pi) / 12) / 2;
    return make_case("f_half", {}, lhs, rhs, zero, ctx, policy);
  }));
  return out;
}

IdentityCase verify_two_variable(const Real& s_in, const Real& b_in, const PrecisionContext& ctx,
                                 const TolerancePolicy& policy) {
  const nlohmann::json params = {{"s", param_value(s_in)}, {"b", param_value(b_in)}};
  return guarded("two_variable_func_eq", params, ctx, [&] {
    if (s_in.sign() <= 0 || b_in.sign() <= 0) throw DomainError("two-variable equation needs s, b > 0");
    const mpfr_prec_t wp = ctx.working();
    const Real s = s_in.rounded(wp);
    const Real b = b_in.rounded(wp);
    const Real half = Real(1L, wp) / 2;
    const Real quarter = Real(1L, wp) / 4;
    // k-th log factor; the 1/2 cancels in the difference.
    auto factor = [&](const Real& x, long k) {
      const Real u = x + k;
      return (u + quarter) * -log1p(half / u);
    };
    SeriesOptions opts;
    opts.decay = Decay::kPowerLaw;
    opts.exponent = 2;
    opts.exponent_step = 1;
    opts.m0 = 16;
    opts.levels = 11;
    opts.target = Real(1e-12, wp);
    const SeriesResult lhs = sum_series([&](long k) { return factor(s, k) - factor(b, k); }, ctx, opts);

    const Real& lo = s < b ? s : b;
    const Real& hi = s < b ? b : s;
    const QuadratureResult q = integrate_interval(
        [&](const Real& z) { return log_gamma(z + half, ctx) - log_gamma(z, ctx); }, lo, hi, ctx);
    const Real integral = s < b ? -q.value : q.value;
    const Real rhs = integral +
                     quarter * (log_gamma(2 * b + 1, ctx) - log_gamma(2 * s + 1, ctx) + log(s) - log(b)) +
                     half * const_log2(wp) * (s - b);
    return make_case("two_variable_func_eq", params, lhs.value, rhs, lhs.est_error + q.est_error, ctx, policy);
  });
}

IdentityCase verify_hurwitz_zeta(const Real& s_in, int k, const PrecisionContext& ctx,
                                 const TolerancePolicy& policy) {
  const nlohmann::json params = {{"s", param_value(s_in)}, {"k", k}};
  return guarded("hurwitz_zeta_zeta", params, ctx, [&] {
    if (k < 0) throw DomainError("k must be >= 0");
    const mpfr_prec_t wp = ctx.working();
    const Real s = s_in.rounded(wp);
    const Real lhs =
        hurwitz_difference(s, Real(make_rational(k + 1, 2), wp), Real(make_rational(k + 2, 2), wp), ctx).value;
    // (2^s - 2) zeta(s) = 2^s eta(s), finite at s = 1.
    Real inner = dirichlet_eta(s, ctx);
    for (int j = 1; j <= k; ++j) inner += sign_pow(j) * pow(Real(static_cast<long>(j), wp), -s);
    const Real rhs = sign_pow(k) * pow(Real(2L, wp), s) * inner;
    return make_case("hurwitz_zeta_zeta", params, lhs, rhs, Real(0L, wp), ctx, policy);
  });
}

IdentityCase verify_hurwitz_beta(const Real& s_in, int k, const PrecisionContext& ctx,
                                 const TolerancePolicy& policy) {
  const nlohmann::json params = {{"s", param_value(s_in)}, {"k", k}};
  return guarded("hurwitz_zeta_beta", params, ctx, [&] {
    if (k < 0) throw DomainError("k must be >= 0");
    const mpfr_prec_t wp = ctx.working();
    const Real s = s_in.rounded(wp);
    const Real lhs = hurwitz_difference(s, Real(make_rational(2 * k + 1, 4), wp),
                                        Real(make_rational(2 * k + 3, 4), wp), ctx)
                         .value;
    Real inner = dirichlet_beta(s, ctx);
    for (int j = 0; j < k; ++j) inner -= sign_pow(j) * pow(Real(2L * j + 1, wp), -s);
    const Real rhs = sign_pow(k) * pow(Real(4L, wp), s) * inner;
    return make_case("hurwitz_zeta_beta", params, lhs, rhs, Real(0L, wp), ctx, policy);
  });
}

}  // namespace hypint
