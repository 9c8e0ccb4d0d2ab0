#pragma once

#include <string>

#include "hypint/hiprec/real.hpp"
#include "hypint/oracle/quadrature.hpp"

namespace hypint {

// Integral over (0, inf) of (tanh x / x)^N tanh^K x sech^L x e^{-Tx}.
class IntegralSpec {
 public:
  // DivergentInput unless the integral converges, which needs L + T > 0 or
  // N >= 2. DomainError for negative L or T.
  IntegralSpec(int n, int k, Real l, Real t);

  static bool converges(int n, int k, const Real& l, const Real& t);

  int n() const { return n_; }
  int k() const { return k_; }
  const Real& l() const { return l_; }
  const Real& t() const { return t_; }

  Integrand integrand(const PrecisionContext& ctx) const;
  QuadratureResult integrate(const PrecisionContext& ctx, const QuadratureOptions& opts = {}) const;

  std::string describe() const;

 private:
  int n_;
  int k_;
  Real l_;
  Real t_;
};

}  // namespace hypint
