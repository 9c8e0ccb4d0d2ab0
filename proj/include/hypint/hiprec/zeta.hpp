#pragma once

#include "hypint/hiprec/real.hpp"

namespace hypint {

// zeta(s, a) and its s-derivative by Euler-Maclaurin. PoleError at s = 1,
// DomainError for a <= 0.
Real hurwitz_zeta(const Real& s, const Real& a, const PrecisionContext& ctx);
Real hurwitz_zeta_sderiv(const Real& s, const Real& a, const PrecisionContext& ctx);

struct ZetaWithDeriv {
  Real value;
  Real deriv;
};
ZetaWithDeriv hurwitz_zeta_both(const Real& s, const Real& a, const PrecisionContext& ctx);

// zeta(s, a1) - zeta(s, a2) and its s-derivative; finite at s = 1.
ZetaWithDeriv hurwitz_difference(const Real& s, const Real& a1, const Real& a2,
                                 const PrecisionContext& ctx);

Real riemann_zeta(const Real& s, const PrecisionContext& ctx);
Real zeta_sderiv(const Real& s, const PrecisionContext& ctx);
Real dirichlet_beta(const Real& s, const PrecisionContext& ctx);
Real beta_sderiv(const Real& s, const PrecisionContext& ctx);
// eta(1) = log 2.
Real dirichlet_eta(const Real& s, const PrecisionContext& ctx);
// PoleError at s = 1.
Real dirichlet_lambda(const Real& s, const PrecisionContext& ctx);

Real riemann_zeta(long s, const PrecisionContext& ctx);
Real dirichlet_beta(long s, const PrecisionContext& ctx);

// Reflection values, k >= 1:
//   zeta'(-2k), beta'(1 - 2k) from zeta(2k + 1) and beta(2k),
//   beta'(-2k) from the Hurwitz derivatives at 1/4 and 3/4.
Real zeta_sderiv_neg_even(int k, const PrecisionContext& ctx);
Real beta_sderiv_neg_odd(int k, const PrecisionContext& ctx);
Real beta_sderiv_neg_even(int k, const PrecisionContext& ctx);

}  // namespace hypint
