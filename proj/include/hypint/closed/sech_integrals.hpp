#pragma once

#include "hypint/hiprec/real.hpp"

namespace hypint {

// Integral over (0, inf) of sech^L x e^{-Tx} for integer L >= 0 (L = 0 needs
// T > 0). UnsupportedParameter for non-integer L, DomainError for negative
// arguments or the divergent L = T = 0.
Real sech_power_exp(const Real& l, const Real& t, const PrecisionContext& ctx);
Real sech_power_exp(int l, const Real& t, const PrecisionContext& ctx);

// Integral over (0, inf) of tanh x sech^L x e^{-Tx}, L >= 1.
Real tanh_sech_power_exp(int l, const Real& t, const PrecisionContext& ctx);

}  // namespace hypint
