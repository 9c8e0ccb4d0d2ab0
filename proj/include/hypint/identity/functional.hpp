#pragma once

#include <vector>

#include "hypint/closed/constant_combination.hpp"
#include "hypint/identity/report.hpp"
#include "hypint/oracle/quadrature.hpp"
#include "hypint/oracle/series.hpp"

namespace hypint {

// Functional equations 1..8: dividing the integer-T closed form of
// tanh x / x sech^L x e^{-Tx} (L = (id + 1) / 2, T = 2k + (id + 1) % 2) by
// n_k^{s+L} and summing over k. Odd-argument forms (ids 1, 4, 5, 8) sum over
// n_k = 2k + 1 and give beta(s + j); the others sum over n_k = k and give
// (2^{1-s-j} - 1) zeta(s + j).
struct FunctionalEquation {
  int id = 0;
  int l = 0;
  int parity = 0;
  bool beta_side = false;
  // coefficients[j] multiplies beta(s + j) or (2^{1-s-j} - 1) zeta(s + j), j = 0..L.
  std::vector<ConstantCombination> coefficients;
  // sum_k (-1)^k S_k / n_k^{s+L}, S_k = sum_j (-1)^j Q(j - k) log a_j.
  std::vector<BigRational> log_poly;
};

// UnsupportedParameter for ids outside 1..8.
FunctionalEquation functional_equation(int id);

// Left side by quadrature of the polylog-weighted integrand; s > 0.
QuadratureResult functional_lhs(int id, const Real& s, const PrecisionContext& ctx);

struct FunctionalRhs {
  Real value;
  Real series_error;
};
FunctionalRhs functional_rhs(int id, const Real& s, const PrecisionContext& ctx);

IdentityCase verify_functional_equation(int id, const Real& s, const PrecisionContext& ctx,
                                        const TolerancePolicy& policy = {});

}  // namespace hypint
