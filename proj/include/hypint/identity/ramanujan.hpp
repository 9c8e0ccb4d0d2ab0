#pragma once

#include <optional>
#include <string_view>

#include "hypint/identity/report.hpp"

namespace hypint {

enum class RamanujanKind { kCoth, kSech, kCsch, kTanh };
std::string_view ramanujan_name(RamanujanKind k);
std::optional<RamanujanKind> parse_ramanujan(std::string_view name);

struct RamanujanSides {
  Real lhs;
  Real rhs;
  Real series_error;
};

// Both sides of the hyperbolic Ramanujan-type identity of the given kind.
// alpha != 0; N >= 1 (N >= 0 for sech). DomainError otherwise.
RamanujanSides ramanujan_sides(RamanujanKind kind, const Real& alpha, int n,
                               const PrecisionContext& ctx);

IdentityCase verify_ramanujan(RamanujanKind kind, const Real& alpha, int n,
                              const PrecisionContext& ctx, const TolerancePolicy& policy = {});

}  // namespace hypint
