#pragma once

#include "hypint/closed/integral_spec.hpp"
#include "hypint/hiprec/real.hpp"

namespace hypint {

// The first weighted integral is lhs, minus the sum of the others is rhs.
struct Residual {
  Real lhs;
  Real rhs;
  Real value;         // |lhs - rhs|
  Real oracle_error;  // sum of |weight| * quadrature error estimate
  Real scale;         // largest |weighted term|, for relative comparison
};

// (L+2)(L+3) I(L+4) - ((L+1)(2L+3) - T^2 + 1) I(L+2) - (T^2 - L^2) I(L),
// I(L) = integral of sech^L x e^{-Tx}, all by quadrature. L > 0, T >= 0.
Residual two_step_recurrence_residual(const Real& l, const Real& t, const PrecisionContext& ctx);

// N I(N+1, K, L, T) - (N+K+1) I(N, K, L+2, T) + L I(N, K+2, L, T) + T I(N, K+1, L, T)
// for the general four-parameter integral. DivergentInput if any of the four
// integrals diverges.
Residual partial_integration_residual(const IntegralSpec& spec, const PrecisionContext& ctx);

}  // namespace hypint
