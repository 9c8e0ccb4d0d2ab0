#pragma once

#include <utility>
#include <vector>

#include "hypint/closed/constant_combination.hpp"
#include "hypint/hiprec/real.hpp"

namespace hypint {

// Integral over (0, inf) of tanh x / x sech^L x e^{-Tx} for L in 1..4 and any
// real T >= 0, through Hurwitz zeta s-derivatives at negative integers and
// log Gamma at (T + 1)/4, (T + 3)/4 (odd L) or (T + 2)/4, (T + 4)/4 (even L).
// UnsupportedParameter for other L, DomainError for T < 0.
Real tanh_over_x_sech_exp(int l, const Real& t, const PrecisionContext& ctx);

// Same integral at integer T as an exact combination of named constants plus
// a finite logarithmic sum.
ConstantCombination tanh_over_x_sech_exp_symbolic(int l, long t);

// The integer-T closed form for T = 2k + parity:
//   (-1)^k [ sum_b P_b(k) b + sum_j (-1)^j Q(j - k) log(a_j) ]
// with j = 0..k-1, a_j = 2j + 1 when odd_args, else j = 1..k, a_j = j.
// Polynomials list coefficients by increasing power.
struct IntegerTForm {
  std::vector<std::pair<Basis, std::vector<BigRational>>> terms;
  std::vector<BigRational> log_poly;
  bool odd_args = false;
};
IntegerTForm integer_t_form(int l, int parity);

}  // namespace hypint
