#pragma once

#include <vector>

#include "hypint/hiprec/real.hpp"

namespace hypint {

// Li_s(x) for fixed s > 0 and 0 < x < 1. Caches k^-s and the zeta(s - k)/k!
// coefficients, so reuse one evaluator across many x. Not thread-safe; give
// each thread its own.
class Polylog {
 public:
  Polylog(const Real& s, const PrecisionContext& ctx);

  // Direct series when -log x >= 1/8, expansion in w = -log x otherwise.
  Real operator()(const Real& x) const;
  // Same, taking w = -log x directly; avoids rounding x near 1.
  Real at_log(const Real& w) const;

  Real series(const Real& x) const;
  Real expansion(const Real& w) const;

  const Real& order() const { return s_; }

 private:
  const Real& coefficient(std::size_t k) const;
  const Real& inv_power(std::size_t k) const;

  Real s_;
  PrecisionContext ctx_;
  mpfr_prec_t prec_;
  bool integer_order_;
  long n_ = 0;
  Real gamma_term_;     // Gamma(1 - s), non-integer s only
  Real harmonic_term_;  // H_{n-1}, integer s only
  Real inv_factorial_;  // 1/(n-1)!, integer s only
  mutable std::vector<Real> coeffs_;  // zeta(s - k)/k!
  mutable std::vector<Real> inv_powers_;
};

Real polylog(const Real& s, const Real& x, const PrecisionContext& ctx);

}  // namespace hypint
