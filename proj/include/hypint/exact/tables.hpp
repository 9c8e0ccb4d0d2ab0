#pragma once

#include "hypint/exact/coeff_table.hpp"
#include "hypint/exact/rational.hpp"

namespace hypint {

// kAuto runs the dual-construction checks unless NDEBUG is defined.
enum class CrossCheck { kAuto, kOn, kOff };

bool cross_check_enabled(CrossCheck mode);

// g_{k,N} stored at (N, k) for 1 <= k <= N <= n_max + 1.
CoeffTable g_table(int n_max);
// h_{k,N} stored at (N, k) for 1 <= k <= N <= n_max + 1.
CoeffTable h_table(int n_max);

// c_{N,k}, 0 <= k <= N <= n_max: coefficients of sech^{(2N+1)} in powers
// sech^{2k+1}.
CoeffTable sech_deriv_coeffs(int n_max, CrossCheck check = CrossCheck::kAuto);
// d_{N,k}, 1 <= k <= N <= n_max: coefficients of tanh^{(2N)} as
// tanh * sech^{2k}.
CoeffTable tanh_deriv_coeffs(int n_max, CrossCheck check = CrossCheck::kAuto);

struct NormalizedMatrices {
  CoeffTable u;  // rows/cols from 0
  CoeffTable v;
  CoeffTable x;  // rows/cols from 1
  CoeffTable y;
};

NormalizedMatrices normalized_matrices(int n_max, CrossCheck check = CrossCheck::kAuto);

// d_N(p, 2k) stored at (p, 2k) for 0 <= p <= N-1, 0 <= k <= p. Requires N >= 2.
CoeffTable dN_table(int n);

// c_{N,L}(p, 2k) stored at (p, 2k) for 0 <= p <= N-1, with c(0, 0) = 1.
// Rewrites the (tanh x / x)^N sech^L integral as a combination of
// (tanh x / x)^{N-p} sech^{L+2k} integrals.
CoeffTable reduction_coeffs(int n, const BigRational& l);

// Exact inverse of a unit lower-triangular table by forward substitution.
// first is the smallest row/col index in use (0 or 1).
CoeffTable unit_lower_inverse(const CoeffTable& m, int first, TableKind result_kind);

// Exact product a * b restricted to rows/cols first..max_row.
CoeffTable multiply(const CoeffTable& a, const CoeffTable& b, int first, TableKind result_kind);

}  // namespace hypint
