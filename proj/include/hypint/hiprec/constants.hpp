#pragma once

#include <span>
#include <string_view>

#include "hypint/hiprec/real.hpp"

namespace hypint {

// Names accepted by named_constant, in display order:
// pi, gamma, log2, logpi, loggamma_quarter, beta2, beta4, zeta3, zeta5,
// zetadot_m1, zetadot_m3, betadot_m2, betadot_m4.
std::span<const std::string_view> constant_names();

// Cached per working precision. Throws std::invalid_argument for unknown names.
Real named_constant(std::string_view name, const PrecisionContext& ctx);

}  // namespace hypint
