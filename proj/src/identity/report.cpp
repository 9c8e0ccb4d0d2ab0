#include "hypint/identity/report.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace hypint {

std::string_view status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::kPass: return "pass";
    case CaseStatus::kFail: return "fail";
    case CaseStatus::kSkipped: return "skipped";
  }
  return "fail";
}

Real TolerancePolicy::tolerance(const Real& oracle_error, const PrecisionContext& ctx) const {
  const mpfr_prec_t wp = ctx.working();
  const Real fl = floor ? Real(*floor, wp) : ldexp(Real(1L, wp), -(static_cast<long>(ctx.bits) - 24));
  return max(4 * oracle_error.rounded(wp), fl);
}

IdentityCase make_case_with_tolerance(std::string id, nlohmann::json params, const Real& lhs,
                                      const Real& rhs, const Real& oracle_error,
                                      const Real& tolerance) {
  IdentityCase c;
  c.id = std::move(id);
  c.params = std::move(params);
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_err = abs(lhs - rhs);
  const Real scale = max(abs(lhs), abs(rhs));
  c.rel_err = scale.is_zero() ? Real(0L, lhs.prec()) : c.abs_err / scale;
  c.oracle_error = oracle_error;
  c.tolerance = tolerance;
  c.status = (c.abs_err <= tolerance || c.rel_err <= tolerance) ? CaseStatus::kPass : CaseStatus::kFail;
  return c;
}

IdentityCase make_case(std::string id, nlohmann::json params, const Real& lhs, const Real& rhs,
                       const Real& oracle_error, const PrecisionContext& ctx,
                       const TolerancePolicy& policy) {
  return make_case_with_tolerance(std::move(id), std::move(params), lhs, rhs, oracle_error,
                                  policy.tolerance(oracle_error, ctx));
}

IdentityCase skipped_case(std::string id, nlohmann::json params, const Real& lhs, const Real& rhs,
                          std::string note) {
  IdentityCase c = make_case_with_tolerance(std::move(id), std::move(params), lhs, rhs,
                                            Real(0L, lhs.prec()), Real(0L, lhs.prec()));
  c.status = CaseStatus::kSkipped;
  c.note = std::move(note);
  return c;
}

IdentityCase failed_case(std::string id, nlohmann::json params, std::string note,
                         const PrecisionContext& ctx) {
  const Real zero(0L, ctx.working());
  IdentityCase c = make_case_with_tolerance(std::move(id), std::move(params), zero, zero, zero, zero);
  c.status = CaseStatus::kFail;
  c.note = std::move(note);
  return c;
}

nlohmann::json param_value(const Real& x) {
  if (x.is_integer() && abs(x) < Real(1L << 40, 64)) return x.to_long();
  // Random draws sit on a 1e-6 grid, so 12 digits print them exactly.
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.12Rg", x.raw());
  return std::string(buf);
}

std::size_t SuiteReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const IdentityCase& c) { return c.status == s; }));
}

std::string format_value(const Real& x, unsigned bits) {
  const int digits = std::max(1, static_cast<int>(std::floor(bits * 0.301)) - 2);
  return x.to_string(digits);
}

std::string format_error(const Real& x) { return x.to_string(6); }

nlohmann::json SuiteReport::to_json(bool include_wall_time) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["precision_bits"] = precision_bits;
  j["seed"] = seed;
  j["trials"] = trials;
  j["ranges"] = ranges;
  if (!subsuites.empty()) j["subsuites"] = subsuites;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json jc;
    jc["suite"] = c.suite;
    jc["id"] = c.id;
    jc["params"] = c.params;
    jc["lhs"] = format_value(c.lhs, precision_bits);
    jc["rhs"] = format_value(c.rhs, precision_bits);
    jc["abs_err"] = format_error(c.abs_err);
    jc["rel_err"] = format_error(c.rel_err);
    jc["oracle_error"] = format_error(c.oracle_error);
    jc["tolerance"] = format_error(c.tolerance);
    jc["status"] = std::string(status_name(c.status));
    if (!c.note.empty()) jc["note"] = c.note;
    arr.push_back(std::move(jc));
  }
  j["cases"] = std::move(arr);
  j["summary"] = {{"pass", count(CaseStatus::kPass)},
                  {"fail", count(CaseStatus::kFail)},
                  {"skipped", count(CaseStatus::kSkipped)}};
  if (include_wall_time) j["wall_time"] = wall_time;
  return j;
}

void sort_cases(std::vector<IdentityCase>& cases) {
  std::stable_sort(cases.begin(), cases.end(), [](const IdentityCase& a, const IdentityCase& b) {
    const std::string pa = a.params.dump();
    const std::string pb = b.params.dump();
    return std::tie(a.suite, a.id, pa) < std::tie(b.suite, b.id, pb);
  });
}

}  // namespace hypint
