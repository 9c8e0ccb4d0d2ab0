#include <set>

#include "doctest.h"
#include "hypint/closed/constant_combination.hpp"
#include "hypint/errors.hpp"
#include "hypint/hiprec/zeta.hpp"
#include "hypint/identity/functional.hpp"
#include "hypint/identity/misc_identities.hpp"
#include "hypint/identity/ramanujan.hpp"
#include "hypint/identity/report.hpp"
#include "hypint/identity/suite.hpp"
#include "support.hpp"

using namespace hypint;
using hypint::test::diff;

namespace {

const PrecisionContext kCtx{128};

Real r(long n, long d = 1) { return Real(make_rational(n, d), kCtx.working()); }

}  // namespace

TEST_CASE("tolerance policy and case status") {
  const TolerancePolicy def;
  CHECK(def.tolerance(r(0), kCtx).to_double() == doctest::Approx(std::ldexp(1.0, -(128 - 24))));
  CHECK(def.tolerance(r(1, 1000), kCtx).to_double() == doctest::Approx(4e-3));
  const TolerancePolicy loose{1e-20};
  CHECK(loose.tolerance(r(0), kCtx).to_double() == doctest::Approx(1e-20));
  const IdentityCase pass = make_case("x", {}, r(1), r(1) + Real(1e-40, 160), r(0), kCtx, def);
  CHECK(pass.status == CaseStatus::kPass);
  const IdentityCase fail = make_case("x", {}, r(1), r(1) + Real(1e-20, 160), r(0), kCtx, def);
  CHECK(fail.status == CaseStatus::kFail);
  CHECK(status_name(CaseStatus::kSkipped) == "skipped");
  CHECK(param_value(r(3)) == nlohmann::json(3));
  CHECK(param_value(r(1, 4)).is_string());
}

TEST_CASE("functional equations") {
  const FunctionalEquation fe = functional_equation(8);
  CHECK(fe.beta_side);
  CHECK_THROWS_AS(functional_equation(9), UnsupportedParameter);
  const IdentityCase c3 = verify_functional_equation(3, r(2), PrecisionContext{192}, TolerancePolicy{1e-20});
  CHECK(c3.status == CaseStatus::kPass);
  CHECK(c3.abs_err < Real(1e-20, 64));
  CHECK(verify_functional_equation(1, r(3, 2), kCtx).status == CaseStatus::kPass);
  CHECK(verify_functional_equation(8, r(1), kCtx).status == CaseStatus::kPass);
  // Left side against the series side at a non-integer exponent.
  const FunctionalRhs rhs = functional_rhs(6, Real::parse("0.853829", kCtx.working()), kCtx);
  const QuadratureResult lhs = functional_lhs(6, Real::parse("0.853829", kCtx.working()), kCtx);
  CHECK(diff(lhs.value, rhs.value) <= 4 * (rhs.series_error + lhs.est_error).to_double());
  CHECK(rhs.series_error < Real(1e-20, 64));
}

TEST_CASE("functional equations cover every basis constant") {
  std::array<bool, kBasisSize> seen{};
  for (int id = 1; id <= 8; ++id) {
    for (const ConstantCombination& c : functional_equation(id).coefficients) {
      for (Basis b : all_basis()) seen[static_cast<std::size_t>(b)] |= c.coefficient(b) != 0;
    }
  }
  for (Basis b : all_basis()) {
    if (b != Basis::kOne) CHECK_MESSAGE(seen[static_cast<std::size_t>(b)], basis_name(b));
  }
}

TEST_CASE("ramanujan-type identities") {
  CHECK(verify_ramanujan(RamanujanKind::kCoth, r(1), 1, kCtx).status == CaseStatus::kPass);
  CHECK(verify_ramanujan(RamanujanKind::kTanh, r(2), 2, kCtx).status == CaseStatus::kPass);
  // At alpha = 1, N = 0 the sech identity is a perfect square of beta(1) = pi/4.
  const RamanujanSides s = ramanujan_sides(RamanujanKind::kSech, r(1), 0, kCtx);
  const Real pi = const_pi(kCtx.working());
  CHECK(diff(s.rhs, pi * pi / 16L) < 1e-36);
  CHECK(diff(s.lhs, s.rhs) < 1e-36);
  for (RamanujanKind k : {RamanujanKind::kCoth, RamanujanKind::kSech, RamanujanKind::kCsch, RamanujanKind::kTanh}) {
    CHECK(parse_ramanujan(ramanujan_name(k)) == k);
    for (const Real& a : {r(-7, 10), r(3, 10), r(3)}) {
      CHECK(verify_ramanujan(k, a, 2, kCtx).status == CaseStatus::kPass);
    }
  }
  // coth at alpha = 1, N = 1: sum coth(pi n) / n^3 = 7 pi^3 / 180.
  const RamanujanSides c = ramanujan_sides(RamanujanKind::kCoth, r(1), 1, kCtx);
  CHECK(diff(c.lhs, c.rhs) < 1e-36);
  CHECK(verify_ramanujan(RamanujanKind::kCoth, r(0), 1, kCtx).status == CaseStatus::kFail);
}

TEST_CASE("limit equation") {
  const Real l2 = limit_value(2, kCtx);
  const SeriesValue s = limit_sum(2, r(1, 20), kCtx);
  // The sum approaches the limit as L - alpha / 2.
  CHECK(diff(s.value + r(1, 40), l2) < 0.01);
  CHECK(diff(s.value + r(1, 40), l2) < 1e-30);
  // Raw discrepancies for N = 1 are dominated by the alpha / 2 drift.
  const Real l1 = limit_value(1, kCtx);
  const Real d1 = abs(limit_sum(1, r(1, 10), kCtx).value - l1);
  const Real d2 = abs(limit_sum(1, r(1, 20), kCtx).value - l1);
  const Real d3 = abs(limit_sum(1, r(1, 40), kCtx).value - l1);
  CHECK((d1 / d2).to_double() == doctest::Approx(2.0).epsilon(0.01));
  CHECK((d2 / d3).to_double() == doctest::Approx(2.0).epsilon(0.01));
  const std::vector<IdentityCase> cases = verify_limit_equation(1, {r(2, 5), r(1, 10), r(1, 20), r(1, 40)}, kCtx);
  bool saw_skip = false;
  for (const IdentityCase& c : cases) {
    CHECK(c.status != CaseStatus::kFail);
    if (c.params.value("alpha", nlohmann::json()) == nlohmann::json("0.4")) saw_skip |= c.status == CaseStatus::kSkipped;
  }
  CHECK(saw_skip);
}

TEST_CASE("polygamma at one quarter") {
  for (int n = 1; n <= 4; ++n) {
    const std::vector<IdentityCase> cases = verify_polygamma_quarter(n, kCtx);
    CHECK(cases.size() == 4);
    for (const IdentityCase& c : cases) CHECK(c.status == CaseStatus::kPass);
  }
}

TEST_CASE("log-log identities") {
  for (int n = 1; n <= 2; ++n) {
    CHECK(verify_loglog_beta(n, kCtx).status == CaseStatus::kPass);
    CHECK(verify_loglog_zeta(n, kCtx).status == CaseStatus::kPass);
  }
  for (const IdentityCase& c : verify_blagouchine(kCtx)) CHECK(c.status == CaseStatus::kPass);
  CHECK(verify_loglog_tanh_sech(r(2), kCtx).status == CaseStatus::kPass);
  CHECK(verify_loglog_tanh_sech(r(7, 3), kCtx).status == CaseStatus::kPass);
}

TEST_CASE("products and two-variable equation") {
  for (const IdentityCase& c : verify_products(10000, 1e-3, kCtx)) CHECK(c.status == CaseStatus::kPass);
  const IdentityCase tv = verify_two_variable(r(3, 4), r(5, 2), kCtx, TolerancePolicy{1e-20});
  CHECK(tv.status == CaseStatus::kPass);
}

TEST_CASE("hurwitz shift identities") {
  CHECK(verify_hurwitz_zeta(r(1), 3, kCtx).status == CaseStatus::kPass);
  CHECK(verify_hurwitz_zeta(r(5, 2), 0, kCtx).status == CaseStatus::kPass);
  CHECK(verify_hurwitz_beta(r(3, 2), 4, kCtx).status == CaseStatus::kPass);
}

TEST_CASE("suite runner") {
  const auto& names = suite_names();
  CHECK(names.back() == "all");
  CHECK(names.size() >= 10);
  CHECK_THROWS_AS(run_suite("bogus", kCtx), UnknownSuite);
  SuiteOptions o;
  o.threads = 2;
  const SuiteReport pi = run_suite("part_int", kCtx, o);
  CHECK(pi.cases.size() == 25);
  CHECK(pi.all_passed());
  const SuiteReport a = run_suite("recurrence2", kCtx, o);
  o.threads = 1;
  const SuiteReport b = run_suite("recurrence2", kCtx, o);
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  o.seed = 43;
  const SuiteReport c = run_suite("recurrence2", kCtx, o);
  CHECK(a.to_json(false).dump() != c.to_json(false).dump());
  const nlohmann::json j = a.to_json();
  for (const char* key : {"suite", "precision_bits", "seed", "cases"}) CHECK(j.contains(key));
  for (const auto& cs : j["cases"]) {
    for (const char* key : {"id", "params", "lhs", "rhs", "abs_err", "rel_err", "tolerance", "status"}) {
      CHECK(cs.contains(key));
    }
  }
}

TEST_CASE("raising precision keeps passing cases passing") {
  const PrecisionContext hi{256};
  for (const char* suite : {"ramanujan", "polygamma", "limit"}) {
    const SuiteReport lo = run_suite(suite, kCtx);
    const SuiteReport up = run_suite(suite, hi);
    REQUIRE(lo.cases.size() == up.cases.size());
    for (std::size_t i = 0; i < lo.cases.size(); ++i) {
      // Tighter tolerances can move limit cases out of the asymptotic regime (skipped), never to fail.
      if (lo.cases[i].status == CaseStatus::kPass) CHECK(up.cases[i].status != CaseStatus::kFail);
    }
  }
}
