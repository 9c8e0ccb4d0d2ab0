#pragma once

#include "hypint/hiprec/real.hpp"

namespace hypint {

// Real arguments z > 0 only; DomainError otherwise.
Real log_gamma(const Real& z, const PrecisionContext& ctx);
Real digamma(const Real& z, const PrecisionContext& ctx);
// psi^{(m)}(z) for m >= 1, via (-1)^{m+1} m! zeta(m + 1, z).
Real polygamma(int m, const Real& z, const PrecisionContext& ctx);

// Gamma(1 - s) for non-integer s > 0, by reflection through Gamma(s).
Real gamma_one_minus(const Real& s, const PrecisionContext& ctx);

Real euler_gamma(const PrecisionContext& ctx);

}  // namespace hypint
