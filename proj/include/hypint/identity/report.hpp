#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypint/hiprec/real.hpp"

namespace hypint {

enum class CaseStatus { kPass, kFail, kSkipped };
std::string_view status_name(CaseStatus s);

// tol = max(4 * oracle error, floor); floor defaults to 2^-(bits - 24).
struct TolerancePolicy {
  std::optional<double> floor;
  Real tolerance(const Real& oracle_error, const PrecisionContext& ctx) const;
};

struct IdentityCase {
  std::string suite;
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  Real lhs;
  Real rhs;
  Real abs_err;
  Real rel_err;
  Real oracle_error;
  Real tolerance;
  CaseStatus status = CaseStatus::kFail;
  std::string note;
};

// Fills the error fields and sets status = pass iff abs_err <= tol or
// rel_err <= tol.
IdentityCase make_case(std::string id, nlohmann::json params, const Real& lhs, const Real& rhs,
                       const Real& oracle_error, const PrecisionContext& ctx,
                       const TolerancePolicy& policy);
// Same with an explicit tolerance.
IdentityCase make_case_with_tolerance(std::string id, nlohmann::json params, const Real& lhs,
                                      const Real& rhs, const Real& oracle_error,
                                      const Real& tolerance);
// Recorded, never asserted.
IdentityCase skipped_case(std::string id, nlohmann::json params, const Real& lhs, const Real& rhs,
                          std::string note);
IdentityCase failed_case(std::string id, nlohmann::json params, std::string note,
                         const PrecisionContext& ctx);

// Decimal string for a parameter; integers stay JSON integers.
nlohmann::json param_value(const Real& x);

struct SuiteReport {
  std::string suite;
  std::vector<std::string> subsuites;
  unsigned precision_bits = 128;
  std::uint64_t seed = 0;
  int trials = 0;
  nlohmann::json ranges = nlohmann::json::object();
  std::vector<IdentityCase> cases;
  double wall_time = 0;

  std::size_t count(CaseStatus s) const;
  bool all_passed() const { return count(CaseStatus::kFail) == 0; }
  nlohmann::json to_json(bool include_wall_time = true) const;
};

// Sorts by (suite, id, params) so the report does not depend on scheduling.
void sort_cases(std::vector<IdentityCase>& cases);

// Values print with floor(bits * 0.301) - 2 significant digits.
std::string format_value(const Real& x, unsigned bits);
std::string format_error(const Real& x);

}  // namespace hypint
