#pragma once

#include <vector>

#include "hypint/identity/report.hpp"

namespace hypint {

// sum_{n >= 1} sinh(alpha n) / (n cosh(alpha n)^{2N+1}) and the closed value of
// its alpha -> 0+ limit. For small alpha the sum equals limit - alpha/2 up to
// a term of order exp(-pi^2 / alpha).
struct SeriesValue {
  Real value;
  Real error;
};
SeriesValue limit_sum(int n, const Real& alpha, const PrecisionContext& ctx);
Real limit_value(int n, const PrecisionContext& ctx);

// One "limit_equation" case per alpha comparing sum + alpha/2 with the limit,
// skipped when exp(-pi^2 / alpha) is above the tolerance floor, and one
// "limit_equation_order" case per consecutive pair checking that the gap
// scales linearly in alpha.
std::vector<IdentityCase> verify_limit_equation(int n, const std::vector<Real>& alphas,
                                                const PrecisionContext& ctx,
                                                const TolerancePolicy& policy = {});

// psi^{(2n-1)} and psi^{(2n)} at 1/4 and 3/4 against their Bernoulli / Euler
// number forms; four cases, n >= 1.
std::vector<IdentityCase> verify_polygamma_quarter(int n, const PrecisionContext& ctx,
                                                   const TolerancePolicy& policy = {});

// Log-log integrals: generalized beta / zeta weights, the two classical
// integrals and the tanh x / x sech^L x transform (L > 0; compared with the
// closed form for L in 1..4 and with direct quadrature otherwise).
IdentityCase verify_loglog_beta(int n, const PrecisionContext& ctx, const TolerancePolicy& policy = {});
IdentityCase verify_loglog_zeta(int n, const PrecisionContext& ctx, const TolerancePolicy& policy = {});
std::vector<IdentityCase> verify_blagouchine(const PrecisionContext& ctx, const TolerancePolicy& policy = {});
IdentityCase verify_loglog_tanh_sech(const Real& l, const PrecisionContext& ctx,
                                     const TolerancePolicy& policy = {});

// Partial log-products against beta(2), zeta'(-1) and f(s), all at a fixed
// tolerance; exact relations of f(1/4), f(1/2) at the default tolerance.
std::vector<IdentityCase> verify_products(long terms, double tolerance, const PrecisionContext& ctx,
                                          const TolerancePolicy& policy = {});

// f(s) - f(b) summed from the product terms against the integral of
// log Gamma(z + 1/2) - log Gamma(z) over (b, s) plus elementary terms.
IdentityCase verify_two_variable(const Real& s, const Real& b, const PrecisionContext& ctx,
                                 const TolerancePolicy& policy = {});

// zeta(s, (k+1)/2) - zeta(s, (k+2)/2) and zeta(s, (2k+1)/4) - zeta(s, (2k+3)/4)
// against their zeta / beta expressions; s > 0, k >= 0.
IdentityCase verify_hurwitz_zeta(const Real& s, int k, const PrecisionContext& ctx,
                                 const TolerancePolicy& policy = {});
IdentityCase verify_hurwitz_beta(const Real& s, int k, const PrecisionContext& ctx,
                                 const TolerancePolicy& policy = {});

}  // namespace hypint
