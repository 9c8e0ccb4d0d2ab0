#pragma once

#include "hypint/exact/rational.hpp"

namespace hypint {

// Bernoulli numbers with B_1 = -1/2, so that B_n(0) = B_n.
BigRational bernoulli(unsigned n);

// B_n(z) = sum_k C(n,k) B_k z^{n-k}.
BigRational bernoulli_poly(unsigned n, const BigRational& z);

// Euler numbers E_m (sech x = sum E_m x^m / m!); zero for odd m.
BigRational euler_number(unsigned m);

// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
BigRational harmonic(unsigned n);

// sum_{j=1}^{k} (-1)^j j^m for 0 <= m <= 4 from the closed Faulhaber-type
// forms. Throws UnsupportedDegree for m > 4.
BigRational alt_power_sum(unsigned m, unsigned long k);

}  // namespace hypint
