#pragma once

#include "hypint/hiprec/real.hpp"

namespace hypint {

// Integral of x^n psi(x) over (0, z). For n = 0 the integral diverges at the
// origin and the regularized value log Gamma(z) is returned.
Real adamchik_psi_integral(int n, const Real& z, const PrecisionContext& ctx);

// sum_{k < terms} [1/2 + (k + s + 1/4) log((k + s)/(k + s + 1/2))], the log of
// a partial product of exp(1/2) ((k+s)/(k+s+1/2))^{k+s+1/4}.
Real f_product_partial(const Real& s, long terms, const PrecisionContext& ctx);

// The infinite sum above through Hurwitz zeta derivatives at -1.
Real f_closed(const Real& s, const PrecisionContext& ctx);

// B_n(z) at a real point.
Real bernoulli_poly(unsigned n, const Real& z);

}  // namespace hypint
