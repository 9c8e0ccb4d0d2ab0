#include <random>

#include "doctest.h"
#include "hypint/errors.hpp"
#include "hypint/exact/numbers.hpp"
#include "hypint/hiprec/constants.hpp"
#include "hypint/hiprec/gamma.hpp"
#include "hypint/hiprec/polylog.hpp"
#include "hypint/hiprec/products.hpp"
#include "hypint/hiprec/zeta.hpp"
#include "hypint/oracle/quadrature.hpp"
#include "support.hpp"

using namespace hypint;
using hypint::test::dec;
using hypint::test::diff;

namespace {

const PrecisionContext kCtx{128};
constexpr double kTight = 1e-36;  // about 2^-(128 - 8)

Real r(long n, long d = 1) { return Real(make_rational(n, d), 192); }

}  // namespace

TEST_CASE("precision context") {
  CHECK_THROWS_AS(PrecisionContext(32), std::invalid_argument);
  CHECK_THROWS_AS(PrecisionContext(128, 8), std::invalid_argument);
  CHECK(kCtx.working() == 160);
  CHECK(kCtx.widened(64).bits == 192);
}

TEST_CASE("real arithmetic rejects non-finite results") {
  CHECK_THROWS_AS(Real(1L, 128) / Real(0L, 128), DomainError);
  CHECK_THROWS_AS(log(Real(-1L, 128)), DomainError);
  CHECK(Real::parse("1.5", 128) == Real(3L, 128) / 2L);
}

TEST_CASE("riemann zeta against MPFR") {
  const PrecisionContext ctx{128};
  for (const char* s : {"2", "3", "2.5", "0.5", "-1.5", "7", "1.0001", "0.9", "-3"}) {
    const Real sv = dec(s, 192);
    CHECK(close_to(riemann_zeta(sv, ctx), test::mpfr_zeta_at(sv), kTight));
  }
  const Real pi = const_pi(192);
  CHECK(diff(riemann_zeta(r(2), ctx), pi * pi / 6L) < kTight);
  CHECK_THROWS_AS(riemann_zeta(r(1), ctx), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(r(1), r(1, 2), ctx), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(r(2), r(0), ctx), DomainError);
}

TEST_CASE("dirichlet series relations") {
  const PrecisionContext ctx{128};
  const Real pi = const_pi(192);
  CHECK(diff(dirichlet_beta(r(1), ctx), pi / 4L) < kTight);
  CHECK(diff(dirichlet_beta(r(-2), ctx), r(-1, 2)) < kTight);
  CHECK(diff(dirichlet_beta(r(2), ctx), test::catalan(192)) < kTight);
  CHECK(diff(dirichlet_beta(dec("2.5"), ctx), dec("0.94862217403705470744567576803665123992776892869739")) <
        kTight);
  CHECK(diff(dirichlet_eta(r(1), ctx), const_log2(192)) < kTight);
  for (const char* s : {"2", "3.25", "0.5", "-2.5"}) {
    const Real sv = dec(s, 192);
    const Real z = riemann_zeta(sv, ctx);
    CHECK(close_to(dirichlet_eta(sv, ctx), (1L - pow(Real(2L, 192), 1L - sv)) * z, kTight));
    CHECK(close_to(dirichlet_lambda(sv, ctx), (1L - pow(Real(2L, 192), -sv)) * z, kTight));
  }
  CHECK_THROWS_AS(dirichlet_lambda(r(1), ctx), PoleError);
  CHECK(diff(riemann_zeta(4L, ctx), riemann_zeta(r(4), ctx)) < kTight);
}

TEST_CASE("gamma family against MPFR") {
  const PrecisionContext ctx{128};
  for (const char* z : {"0.25", "0.5", "1", "3.7", "17.25", "0.01", "123.5"}) {
    const Real zv = dec(z, 192);
    CHECK(close_to(log_gamma(zv, ctx), test::mpfr_lngamma_at(zv), kTight));
    CHECK(close_to(digamma(zv, ctx), test::mpfr_digamma_at(zv), kTight));
  }
  CHECK(diff(log_gamma(r(1, 4), ctx), dec("1.2880225246980774573706104402197172959253775651129")) < kTight);
  CHECK(diff(digamma(r(1), ctx), -const_euler(192)) < kTight);
  CHECK(diff(digamma(r(3, 4), ctx) - digamma(r(1, 4), ctx), const_pi(192)) < kTight);
  const Real pi = const_pi(192);
  CHECK(diff(polygamma(1, r(1), ctx), pi * pi / 6L) < kTight);
  CHECK(diff(polygamma(1, r(1, 4), ctx), pi * pi + 8L * test::catalan(192)) < kTight);
  CHECK(diff(polygamma(2, r(1), ctx), -2L * test::mpfr_zeta_at(r(3))) < kTight);
  CHECK_THROWS_AS(log_gamma(r(0), ctx), DomainError);
  CHECK_THROWS_AS(digamma(r(-1, 2), ctx), DomainError);
}

TEST_CASE("hurwitz zeta values") {
  const PrecisionContext ctx{128};
  const Real pi = const_pi(192);
  CHECK(diff(hurwitz_zeta(r(2), r(1), ctx), pi * pi / 6L) < kTight);
  CHECK(diff(hurwitz_zeta(r(2), r(1, 2), ctx), pi * pi / 2L) < kTight);
  CHECK(diff(hurwitz_zeta(r(-2), r(1, 4), ctx) - hurwitz_zeta(r(-2), r(3, 4), ctx), r(-1, 32)) < kTight);
  CHECK(diff(hurwitz_zeta(dec("2.5"), dec("0.3"), ctx), dec("21.06923920224772302695535832408384665764016779466")) <
        1e-34);
  // zeta(-n, a) = -B_{n+1}(a) / (n + 1)
  for (unsigned n = 0; n <= 6; ++n) {
    const BigRational a = make_rational(2, 7);
    const Real expect(BigRational(-bernoulli_poly(n + 1, a) / (n + 1)), 192);
    CHECK(diff(hurwitz_zeta(Real(-static_cast<long>(n), 192), Real(a, 192), ctx), expect) < kTight);
  }
}

TEST_CASE("hurwitz zeta s-derivative") {
  const PrecisionContext ctx{128};
  const Real pi = const_pi(192);
  const Real zeta3 = test::mpfr_zeta_at(r(3));
  CHECK(diff(hurwitz_zeta_sderiv(r(-1), r(1), ctx), dec("-0.16542114370045092921391966024278064276063170782")) <
        kTight);
  CHECK(diff(hurwitz_zeta_sderiv(r(-2), r(1), ctx), -zeta3 / (4L * pi * pi)) < kTight);
  CHECK(diff(hurwitz_zeta_sderiv(dec("-1.5"), dec("0.3"), ctx),
             dec("0.030041790172639778781161876075457075377784035286457")) < kTight);
  CHECK(diff(zeta_sderiv(r(-3), ctx), dec("0.0053785763577743011444169742104138428956644397422955")) < kTight);
  // Lerch: zeta'(0, a) = log Gamma(a) - log(2 pi) / 2 at 100 random a.
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> pick(100000, 10000000);
  const Real half_log_2pi = log(2L * pi) / 2L;
  for (int i = 0; i < 100; ++i) {
    const Real a = r(pick(gen), 1000000);
    CHECK(diff(hurwitz_zeta_sderiv(r(0), a, ctx), log_gamma(a, ctx) - half_log_2pi) < 1e-34);
  }
  const ZetaWithDeriv both = hurwitz_zeta_both(dec("3.5"), r(2, 3), ctx);
  CHECK(diff(both.value, hurwitz_zeta(dec("3.5"), r(2, 3), ctx)) < kTight);
  CHECK(diff(both.deriv, hurwitz_zeta_sderiv(dec("3.5"), r(2, 3), ctx)) < kTight);
  // The difference stays finite at s = 1: zeta(1, 1/4) - zeta(1, 3/4) = pi.
  CHECK(diff(hurwitz_difference(r(1), r(1, 4), r(3, 4), ctx).value, pi) < kTight);
}

TEST_CASE("reflection values at negative integers") {
  const PrecisionContext ctx{128};
  const Real pi = const_pi(192);
  const Real zeta3 = test::mpfr_zeta_at(r(3));
  CHECK(diff(zeta_sderiv_neg_even(1, ctx), -zeta3 / (4L * pi * pi)) < kTight);
  CHECK(diff(beta_sderiv_neg_odd(1, ctx), 2L * test::catalan(192) / pi) < kTight);
  CHECK(diff(beta_sderiv_neg_even(1, ctx), dec("0.25189536315108886027028953341465787887442846891964")) < kTight);
  CHECK(diff(beta_sderiv_neg_even(2, ctx), dec("-2.6466140800671667368703739147679917381313863415525")) < 1e-34);
  // Central differences of beta against the reflection closed forms.
  const Real h = ldexp(Real(1L, 256), -128 / 3);
  const PrecisionContext wide{256};
  for (int k = 1; k <= 4; ++k) {
    const Real s(1L - 2L * k, 256);
    const Real numeric = (dirichlet_beta(s + h, wide) - dirichlet_beta(s - h, wide)) / (2L * h);
    CHECK(close_to(beta_sderiv_neg_odd(k, ctx), numeric, std::ldexp(1.0, -128 / 4)));
    const Real e(-2L * k, 256);
    const Real zn = (riemann_zeta(e + h, wide) - riemann_zeta(e - h, wide)) / (2L * h);
    CHECK(close_to(zeta_sderiv_neg_even(k, ctx), zn, std::ldexp(1.0, -128 / 4)));
  }
}

TEST_CASE("hurwitz difference identities") {
  const PrecisionContext ctx{128};
  // zeta(s, k+1) = zeta(s) - sum_{j<=k} j^-s and
  // 4^-s [zeta(s, k/2 + 1/4) - zeta(s, k/2 + 3/4)] = (-1)^k [beta(s) - sum_{j<k} (-1)^j (2j+1)^-s]
  for (long s : {-4L, -3L, -2L, -1L, 2L, 3L}) {
    const Real sv(s, 192);
    for (long k = 0; k <= 6; ++k) {
      Real partial(0L, 192);
      for (long j = 1; j <= k; ++j) partial += pow(Real(j, 192), -sv);
      CHECK(diff(hurwitz_zeta(sv, Real(k + 1, 192), ctx), riemann_zeta(sv, ctx) - partial) < 1e-30);
      Real alt(0L, 192);
      for (long j = 0; j < k; ++j) alt += Real(static_cast<long>(sign_pow(j)), 192) * pow(Real(2 * j + 1, 192), -sv);
      const Real lhs = pow(Real(4L, 192), -sv) *
                       (hurwitz_zeta(sv, r(2 * k + 1, 4), ctx) - hurwitz_zeta(sv, r(2 * k + 3, 4), ctx));
      const Real rhs = Real(static_cast<long>(sign_pow(k)), 192) * (dirichlet_beta(sv, ctx) - alt);
      CHECK(diff(lhs, rhs) < 1e-30);
    }
  }
}

TEST_CASE("polylog") {
  const PrecisionContext ctx{128};
  CHECK(diff(polylog(r(1), r(1, 2), ctx), const_log2(192)) < kTight);
  const Real near_one = 1L - Real(1e-6, 192);
  const Real pi = const_pi(192);
  CHECK(diff(polylog(r(2), near_one, ctx), pi * pi / 6L) < 1e-4);
  CHECK(diff(polylog(dec("1.5"), dec("0.9"), ctx), dec("1.6144385285663396263278226616566600300995875403672")) <
        kTight);
  CHECK(diff(polylog(dec("0.5"), dec("0.25"), ctx), dec("0.30573493039929638017399956698135067934206223485258")) <
        kTight);
  // Both evaluation routes at x = 1/e.
  const Polylog li(r(3, 2), ctx);
  const Real x = exp(Real(-1L, 192));
  CHECK(diff(li.series(x), li.expansion(Real(1L, 192))) < std::ldexp(1.0, -(128 - 16)));
  const Polylog li3(r(3), ctx);
  CHECK(diff(li3.series(x), li3.expansion(Real(1L, 192))) < std::ldexp(1.0, -(128 - 16)));
  CHECK_THROWS_AS(polylog(r(2), r(3, 2), ctx), DomainError);
}

TEST_CASE("adamchik integral") {
  const PrecisionContext ctx{128};
  CHECK(diff(adamchik_psi_integral(0, r(2), ctx) - adamchik_psi_integral(0, r(1), ctx), r(0)) < kTight);
  CHECK(diff(adamchik_psi_integral(1, r(1), ctx), dec("-0.91893853320467274178032973640561763986139747363778")) <
        std::ldexp(1.0, -(128 - 20)));
  CHECK(diff(adamchik_psi_integral(2, r(1, 2), ctx), dec("-0.12885470371136601652628899525171750958939235516058")) <
        std::ldexp(1.0, -(128 - 20)));
  // Same quantities by tanh-sinh quadrature; the origin behaves like x^{n-1}.
  const auto psi_moment = [&](int n) {
    return [&, n](const Real& x) { return pow(x, static_cast<long>(n)) * digamma(x, ctx); };
  };
  const QuadratureResult q = integrate_interval(psi_moment(2), r(0), r(3, 2), ctx);
  CHECK(diff(adamchik_psi_integral(2, r(3, 2), ctx), q.value) < std::max(4 * q.est_error.to_double(), 1e-30));
  CHECK_THROWS_AS(adamchik_psi_integral(1, r(0), ctx), DomainError);
}

TEST_CASE("product function") {
  const PrecisionContext ctx{128};
  CHECK(diff(f_closed(r(1, 2), ctx), dec("-0.027872552156183990139591702686403792834788513033314")) < kTight);
  CHECK(diff(f_closed(r(1, 4), ctx), dec("-0.059137054445416226392038213051925388422595560197887")) < kTight);
  for (const Real& s : {r(1, 4), r(1, 2), r(1)}) {
    CHECK(diff(f_product_partial(s, 10000, ctx), f_closed(s, ctx)) < 1e-3);
  }
  // The gap shrinks with more factors.
  const Real gap1 = abs(f_product_partial(r(1, 2), 100, ctx) - f_closed(r(1, 2), ctx));
  const Real gap2 = abs(f_product_partial(r(1, 2), 1000, ctx) - f_closed(r(1, 2), ctx));
  CHECK(gap2 < gap1);
  CHECK_THROWS_AS(f_closed(r(0), ctx), DomainError);
}

TEST_CASE("named constants") {
  const PrecisionContext ctx{128};
  CHECK(diff(named_constant("beta2", ctx), test::catalan(192)) < kTight);
  CHECK(diff(named_constant("zeta3", ctx), test::mpfr_zeta_at(r(3))) < kTight);
  CHECK(diff(named_constant("zetadot_m3", ctx), dec("0.0053785763577743011444169742104138428956644397422955")) <
        kTight);
  CHECK(diff(named_constant("betadot_m4", ctx), dec("-2.6466140800671667368703739147679917381313863415525")) <
        1e-34);
  CHECK(constant_names().size() == 13);
  CHECK_THROWS_AS(named_constant("nope", ctx), std::invalid_argument);
}

TEST_CASE("precision scaling") {
  const PrecisionContext lo{128};
  const PrecisionContext hi{192};
  const double bound = std::ldexp(1.0, -(128 - 8));
  CHECK(close_to(riemann_zeta(dec("2.75"), lo), riemann_zeta(dec("2.75"), hi), bound));
  CHECK(close_to(dirichlet_beta(dec("1.25"), lo), dirichlet_beta(dec("1.25"), hi), bound));
  CHECK(close_to(log_gamma(dec("0.3"), lo), log_gamma(dec("0.3"), hi), bound));
  CHECK(close_to(hurwitz_zeta_sderiv(dec("-2.5"), dec("0.7"), lo), hurwitz_zeta_sderiv(dec("-2.5"), dec("0.7"), hi),
                 bound));
  CHECK(close_to(polylog(dec("2.5"), dec("0.99"), lo), polylog(dec("2.5"), dec("0.99"), hi), bound));
}
