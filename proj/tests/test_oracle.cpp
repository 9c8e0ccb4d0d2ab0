#include "doctest.h"
#include "hypint/errors.hpp"
#include "hypint/hiprec/zeta.hpp"
#include "hypint/oracle/loglog.hpp"
#include "hypint/oracle/quadrature.hpp"
#include "hypint/oracle/series.hpp"
#include "support.hpp"

using namespace hypint;
using hypint::test::diff;

namespace {

const PrecisionContext kCtx{128};

double tol(const QuadratureResult& q) { return std::max(4 * q.est_error.to_double(), std::ldexp(1.0, -(128 - 24))); }

Real tanh_over_x_sq(const Real& x) {
  const Real t = tanh(x) / x;
  return t * t;
}

}  // namespace

TEST_CASE("semi-infinite quadrature on classical integrals") {
  const mpfr_prec_t wp = kCtx.working();
  const Real pi = const_pi(wp);
  const QuadratureResult e = integrate_semi_infinite([](const Real& x) { return exp(-x); }, kCtx);
  CHECK(diff(e.value, Real(1L, wp)) < tol(e));
  const QuadratureResult s = integrate_semi_infinite([](const Real& x) { return sech(x); }, kCtx);
  CHECK(diff(s.value, pi / 2L) < tol(s));
  const QuadratureResult t = integrate_semi_infinite(tanh_over_x_sq, kCtx);
  CHECK(diff(t.value, 14L * riemann_zeta(3L, kCtx) / (pi * pi)) < tol(t));
  // Algebraic decay and an integrable origin singularity.
  const QuadratureResult a = integrate_semi_infinite([](const Real& x) { return 1L / (1L + x * x); }, kCtx);
  CHECK(diff(a.value, pi / 2L) < tol(a));
  const QuadratureResult g = integrate_semi_infinite([](const Real& x) { return exp(-x) / sqrt(x); }, kCtx);
  CHECK(diff(g.value, sqrt(pi)) < tol(g));
  CHECK(e.est_error >= 0L);
  CHECK(e.nodes_used > 0);
}

TEST_CASE("substitution invariance") {
  const auto check = [](const Integrand& f) {
    const QuadratureResult base = integrate_semi_infinite(f, kCtx);
    for (long num : {1L, 4L}) {
      const Real a = Real(num, kCtx.working()) / 2L;
      const QuadratureResult scaled = integrate_semi_infinite([&](const Real& x) { return a * f(a * x); }, kCtx);
      CHECK(diff(base.value, scaled.value) <
            std::max(4 * (base.est_error + scaled.est_error).to_double(), std::ldexp(1.0, -(128 - 24))));
    }
  };
  check([](const Real& x) { return sech(x); });
  check(tanh_over_x_sq);
  check([](const Real& x) { return tanh(x) / x * sech(x) * exp(-x); });
}

TEST_CASE("finite interval quadrature keeps endpoint accuracy") {
  const mpfr_prec_t wp = kCtx.working();
  const QuadratureResult q =
      integrate_interval([](const Real& x) { return log(x); }, Real(0L, wp), Real(1L, wp), kCtx);
  CHECK(diff(q.value, Real(-1L, wp)) < tol(q));
  const QuadratureResult p = integrate_interval([](const Real& x) { return 1L / sqrt(x); }, Real(0L, wp),
                                                Real(4L, wp), kCtx);
  CHECK(diff(p.value, Real(4L, wp)) < tol(p));
}

TEST_CASE("quadrature reports non-convergence") {
  QuadratureOptions opts;
  opts.max_level = 3;
  opts.target = Real(1e-60, 200);
  CHECK_THROWS_AS(integrate_semi_infinite([](const Real& x) { return sin(x) * sin(x) / (x * x); }, kCtx, opts),
                  NoConvergence);
}

TEST_CASE("level doubling tightens the estimate") {
  QuadratureOptions coarse;
  coarse.max_level = 10;
  coarse.target = Real(1e-15, 64);
  const QuadratureResult a = integrate_semi_infinite(tanh_over_x_sq, kCtx, coarse);
  const QuadratureResult b = integrate_semi_infinite(tanh_over_x_sq, kCtx);
  CHECK(b.level >= a.level);
  CHECK(b.est_error <= a.est_error);
  CHECK(diff(a.value, b.value) <= a.est_error.to_double());
}

TEST_CASE("series summation modes") {
  const mpfr_prec_t wp = kCtx.working();
  const Real pi = const_pi(wp);
  SeriesOptions alt;
  alt.decay = Decay::kAlternating;
  alt.target = Real(1e-25, 64);
  alt.levels = 12;
  const SeriesResult leibniz = sum_series(
      [&](long n) { return Real(static_cast<long>(n % 2 == 0 ? 1 : -1), wp) / Real(2 * n + 1, wp); }, kCtx, alt);
  CHECK(diff(leibniz.value, pi / 4L) < std::max(4 * leibniz.est_error.to_double(), 1e-30));

  SeriesOptions pl;
  pl.decay = Decay::kPowerLaw;
  pl.start = 1;
  pl.exponents = euler_maclaurin_exponents(2, 12);
  pl.levels = 12;
  pl.target = Real(1e-25, 64);
  const SeriesResult basel = sum_series([&](long n) { return 1L / (Real(n, wp) * Real(n, wp)); }, kCtx, pl);
  CHECK(diff(basel.value, pi * pi / 6L) < std::max(4 * basel.est_error.to_double(), 1e-30));

  SeriesOptions geo;
  geo.start = 1;
  const SeriesResult coth = sum_series(
      [&](long n) {
        const Real x = pi * Real(n, wp);
        return (1L / tanh(x) - 1L) / pow(Real(n, wp), 3L);
      },
      kCtx, geo);
  // sum coth(pi n) / n^3 = 7 pi^3 / 180, with coth - 1 decaying geometrically.
  CHECK(diff(coth.value + riemann_zeta(3L, kCtx), 7L * pi * pi * pi / 180L) < 1e-30);

  // Partial sums S_M = T(M) with two logarithmic terms in the tail; the limit is 0.
  const auto model = [&](long m) {
    const Real mr(m, wp);
    const Real lm = log(mr);
    const Real e = Real(13L, wp) / 10L;
    Real t = pow(mr, -e) * (lm + 2L) + pow(mr, -e - 1L) * (3L * lm - 1L);
    for (long j = 2; j <= 8; ++j) t += pow(mr, -e - Real(j, wp)) / (j + 1);
    return t;
  };
  SeriesOptions lg;
  lg.decay = Decay::kPowerLaw;
  lg.start = 1;
  lg.levels = 13;
  lg.target = Real(1e-20, 64);
  lg.real_exponents = {Real(13L, wp) / 10L};
  const auto telescoped = [&](long k) { return k == 1 ? model(1) : model(k) - model(k - 1); };
  CHECK_THROWS_AS(sum_series(telescoped, kCtx, lg), NoConvergence);
  lg.log_terms = 2;
  const SeriesResult withlog = sum_series(telescoped, kCtx, lg);
  CHECK(abs(withlog.value).to_double() <= 4 * withlog.est_error.to_double());
  CHECK(withlog.est_error < Real(1e-20, 64));

  SeriesOptions bad;
  bad.max_terms = 100;
  CHECK_THROWS_AS(sum_series([&](long n) { return 1L / Real(n + 1, wp); }, kCtx, bad), NoConvergence);
}

TEST_CASE("log-log integrals") {
  const PrecisionContext ctx{128};
  const mpfr_prec_t wp = ctx.working();
  const Real pi = const_pi(wp);
  const QuadratureResult b2 = blagouchine_beta2(ctx);
  CHECK(diff(b2.value, 2L * dirichlet_beta(2L, ctx) / pi) < tol(b2));
  const QuadratureResult z3 = blagouchine_zeta3(ctx);
  CHECK(diff(z3.value, 7L * riemann_zeta(3L, ctx) / (8L * pi * pi)) < tol(z3));
  for (int n = 1; n <= 2; ++n) {
    for (LogLogKind k : {LogLogKind::kBeta, LogLogKind::kZeta}) {
      const QuadratureResult q = integrate_loglog(k, n, ctx);
      CHECK(diff(q.value, loglog_expected(k, n, ctx)) < tol(q));
    }
  }
  // beta, N = 2: 2^3 3! beta(4) / pi^3
  CHECK(diff(loglog_expected(LogLogKind::kBeta, 2, ctx), 48L * dirichlet_beta(4L, ctx) / (pi * pi * pi)) < 1e-36);
}
