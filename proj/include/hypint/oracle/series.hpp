#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hypint/hiprec/real.hpp"

namespace hypint {

enum class Decay {
  kGeometric,    // |t_{k+1} / t_k| eventually <= r < 1; ratio tail bound
  kAlternating,  // decreasing alternating terms; last-term bound
  kPowerLaw,     // tail ~ M^-e (c0 + c1/M + ...); Richardson on M = m0 2^i
};

struct SeriesOptions {
  Decay decay = Decay::kGeometric;
  long start = 0;
  std::optional<Real> target;  // defaults to 2^-(bits - 24)
  long max_terms = 1L << 22;
  // kPowerLaw and the kAlternating fallback: the tail is assumed to expand in
  // M^-(exponent + j * exponent_step), j = 0, 1, ...; partial sums are taken
  // at M = m0 2^i (m0 made even) for i < levels.
  double exponent = 1.0;
  double exponent_step = 1.0;
  // Overrides exponent/exponent_step when non-empty.
  std::vector<double> exponents;
  // Overrides both when non-empty; for exponents that are not binary fractions.
  std::vector<Real> real_exponents;
  long m0 = 16;
  int levels = 10;
  // kPowerLaw: the first log_terms exponents also carry M^-e log M terms.
  // When positive, the limit comes from least-order linear fits with
  // log_terms and log_terms + 1 logarithmic terms, and the error estimate
  // covers the spread between the two models.
  int log_terms = 0;
};

struct SeriesResult {
  Real value;
  Real est_error;
  long terms = 0;
};

// Tail exponents of sum_{n >= M} f(n) for smooth f(n) ~ n^-p by
// Euler-Maclaurin: p - 1, p, p + 1, p + 3, p + 5, ...
std::vector<double> euler_maclaurin_exponents(double p, int count);

using SeriesTerm = std::function<Real(long)>;

// Sums term(k) for k >= start. Terms are requested in increasing k exactly
// once each, so stateful term functions that build running sums are allowed.
// An alternating series that cannot meet the target within 4096 terms falls
// back to Richardson extrapolation on even-length partial sums.
SeriesResult sum_series(const SeriesTerm& term, const PrecisionContext& ctx,
                        const SeriesOptions& opts = {});

}  // namespace hypint
