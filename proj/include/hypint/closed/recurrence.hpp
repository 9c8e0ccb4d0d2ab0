#pragma once

#include <vector>

#include "hypint/closed/constant_combination.hpp"
#include "hypint/exact/rational.hpp"
#include "hypint/hiprec/real.hpp"

namespace hypint {

// Integral of tanh x / x sech^{2N+1} x over (0, inf) as sum_k coeffs[k-1]
// beta(2k) / pi^{2k-1}, k = 1..N+1.
std::vector<BigRational> beta_recurrence_coefficients(int n);
Real beta_recurrence_eval(int n, const PrecisionContext& ctx);
// Only N <= 1 fits the named-constant basis; UnsupportedParameter otherwise.
ConstantCombination beta_recurrence_combination(int n);

// Integral of tanh x / x sech^{2N} x over (0, inf), N >= 1, as
// sum_k coeffs[k-1] zeta(2k+1) / pi^{2k}, k = 1..N.
std::vector<BigRational> zeta_recurrence_coefficients(int n);
Real zeta_recurrence_eval(int n, const PrecisionContext& ctx);
// Only N <= 2 fits the named-constant basis.
ConstantCombination zeta_recurrence_combination(int n);

struct PowerIntegral {
  Real value;
  std::vector<BigRational> coefficients;  // of zeta(2k+1) / pi^{2k}, k = 1..N-1
};

// Integral of (tanh x / x)^N over (0, inf), N >= 2.
std::vector<BigRational> tanh_over_x_power_coefficients(int n);
PowerIntegral tanh_over_x_power(int n, const PrecisionContext& ctx);

// Partial sums (k < terms) of the log-product expansions of beta(2) and
// zeta'(-1).
Real infinite_product_beta2(long terms, const PrecisionContext& ctx);
Real infinite_product_zdot(long terms, const PrecisionContext& ctx);

}  // namespace hypint
