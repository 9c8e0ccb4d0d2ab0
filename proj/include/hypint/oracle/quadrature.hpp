#pragma once

#include <functional>
#include <optional>

#include "hypint/hiprec/real.hpp"

namespace hypint {

using Integrand = std::function<Real(const Real&)>;

struct QuadratureResult {
  Real value;
  Real est_error;  // difference between the last two levels
  long nodes_used = 0;
  int level = 0;
};

struct QuadratureOptions {
  // Defaults to 2^-(bits - 24).
  std::optional<Real> target;
  int min_level = 3;
  int max_level = 10;
};

// Exp-sinh rule x = exp(pi/2 sinh t) on (0, inf). Integrable singularities at
// the origin are fine; the integrand must decay at least like x^-2.
// NoConvergence when max_level is reached first.
QuadratureResult integrate_semi_infinite(const Integrand& f, const PrecisionContext& ctx,
                                         const QuadratureOptions& opts = {});

// Tanh-sinh rule on (a, b). Nodes near an endpoint are formed as
// endpoint +- distance, so an endpoint at 0 keeps full relative accuracy.
QuadratureResult integrate_interval(const Integrand& f, const Real& a, const Real& b,
                                    const PrecisionContext& ctx,
                                    const QuadratureOptions& opts = {});

Real default_target(const PrecisionContext& ctx);

}  // namespace hypint
