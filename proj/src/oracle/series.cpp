#include "hypint/oracle/series.hpp"

#include <cmath>
#include <deque>
#include <vector>

#include "hypint/errors.hpp"
#include "hypint/oracle/quadrature.hpp"

namespace hypint {

namespace {

Real exponent_at(const SeriesOptions& opts, std::size_t j, mpfr_prec_t prec) {
  if (j < opts.real_exponents.size()) return opts.real_exponents[j].rounded(prec);
  if (!opts.real_exponents.empty()) {
    const std::size_t last = opts.real_exponents.size() - 1;
    return opts.real_exponents[last].rounded(prec) + Real(static_cast<long>(j - last), prec);
  }
  return Real(j < opts.exponents.size() ? opts.exponents[j]
                                        : opts.exponent + opts.exponent_step * static_cast<double>(j),
              prec);
}

// Solves a x = b in place by Gaussian elimination with partial pivoting.
std::vector<Real> solve(std::vector<std::vector<Real>> a, std::vector<Real> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    if (a[c][c].is_zero()) throw NoConvergence("series: singular extrapolation system");
    for (std::size_t r = c + 1; r < n; ++r) {
      const Real f = a[r][c] / a[c][c];
      for (std::size_t q = c; q < n; ++q) a[r][q] -= f * a[c][q];
      b[r] -= f * b[c];
    }
  }
  std::vector<Real> x(b);
  for (std::size_t c = n; c-- > 0;) {
    for (std::size_t q = c + 1; q < n; ++q) x[c] -= a[c][q] * x[q];
    x[c] /= a[c][c];
  }
  return x;
}

struct Fit {
  Real value;
  Real err;
};

// Fits S(M) = S + sum_{j < nl} a_j M^-e_j log M + sum_{j < np} b_j M^-e_j
// through the last nl + np + 1 partial sums for every usable np and keeps
// the estimate that moves least from the previous np.
Fit log_fit(const std::vector<long>& ms, const std::vector<Real>& sums, const SeriesOptions& opts,
            int nl, mpfr_prec_t wp) {
  const mpfr_prec_t fp = wp + 64;
  const std::size_t total = sums.size();
  std::vector<Real> ests;
  for (std::size_t np = 2; np + static_cast<std::size_t>(nl) + 1 < total; ++np) {
    const std::size_t n = np + static_cast<std::size_t>(nl) + 1;
    std::vector<std::vector<Real>> a;
    std::vector<Real> b;
    for (std::size_t i = total - n; i < total; ++i) {
      const Real m(ms[i], fp);
      const Real lm = log(m);
      std::vector<Real> row{Real(1L, fp)};
      for (int j = 0; j < nl; ++j) row.push_back(pow(m, -exponent_at(opts, static_cast<std::size_t>(j), fp)) * lm);
      for (std::size_t j = 0; j < np; ++j) row.push_back(pow(m, -exponent_at(opts, j, fp)));
      a.push_back(std::move(row));
      b.push_back(sums[i].rounded(fp));
    }
    ests.push_back(solve(std::move(a), std::move(b))[0]);
  }
  if (ests.size() < 2) throw NoConvergence("series: too few levels for log-power fit");
  std::size_t bi = 1;
  for (std::size_t i = 2; i < ests.size(); ++i) {
    if (abs(ests[i] - ests[i - 1]) < abs(ests[bi] - ests[bi - 1])) bi = i;
  }
  return {ests[bi].rounded(wp), abs(ests[bi] - ests[bi - 1]).rounded(wp)};
}

SeriesResult richardson(const SeriesTerm& term, long k0, Real partial, long done,
                        const PrecisionContext& ctx, const SeriesOptions& opts, const Real& target) {
  const mpfr_prec_t wp = ctx.working();
  long m0 = std::max(opts.m0, done);
  if (m0 % 2 != 0) ++m0;
  std::vector<Real> sums;
  long k = done;
  for (int i = 0; i < opts.levels; ++i) {
    const long m = m0 << i;
    if (m > opts.max_terms) break;
    for (; k < m; ++k) partial += term(k0 + k);
    sums.push_back(partial);
  }
  if (sums.size() < 3) throw NoConvergence("series: too few Richardson levels");
  if (opts.log_terms > 0) {
    std::vector<long> ms;
    for (std::size_t i = 0; i < sums.size(); ++i) ms.push_back(m0 << i);
    const Fit a = log_fit(ms, sums, opts, opts.log_terms, wp);
    const Fit b = log_fit(ms, sums, opts, opts.log_terms + 1, wp);
    const Real err = max(a.err, abs(a.value - b.value));
    if (err > target) {
      throw NoConvergence("series: log-power fit error " + err.to_string(6) + " above target");
    }
    return {a.value, err, k};
  }

  std::vector<Real> row = sums;
  Real best = row.back();
  Real err = abs(row.back() - row[row.size() - 2]);
  Real prev_diag = row.back();
  for (std::size_t j = 0; row.size() > 1; ++j) {
    const Real r = pow(Real(2L, wp), exponent_at(opts, j, wp));
    const Real denom = r - 1L;
    std::vector<Real> next;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      next.push_back((r * row[i + 1] - row[i]) / denom);
    }
    row = std::move(next);
    const Real diag = row.back();
    const Real d = abs(diag - prev_diag);
    // Keep the extrapolant whose change from the previous column is smallest.
    if (d < err) {
      err = d;
      best = diag;
    }
    prev_diag = diag;
  }
  if (err > target) {
    throw NoConvergence("series: Richardson error " + err.to_string(6) + " above target");
  }
  return {best, err, k};
}

}  // namespace

std::vector<double> euler_maclaurin_exponents(double p, int count) {
  std::vector<double> out;
  for (int j = 0; j < count; ++j) out.push_back(j < 3 ? p - 1 + j : p + 1 + 2 * (j - 2));
  return out;
}

SeriesResult sum_series(const SeriesTerm& term, const PrecisionContext& ctx, const SeriesOptions& opts) {
  const mpfr_prec_t wp = ctx.working();
  const Real target = opts.target ? *opts.target : default_target(ctx);
  Real sum(wp);

  switch (opts.decay) {
    case Decay::kGeometric: {
      Real last(wp);
      std::deque<Real> ratios;
      for (long k = 0; k < opts.max_terms; ++k) {
        const Real t = term(opts.start + k);
        sum += t;
        if (k > 0 && !last.is_zero()) {
          ratios.push_back(abs(t) / abs(last));
          if (ratios.size() > 3) ratios.pop_front();
        }
        last = t;
        if (t.is_zero() && k > 8) return {sum, Real(wp), k + 1};
        if (ratios.size() == 3) {
          Real r = max(ratios[0], max(ratios[1], ratios[2]));
          if (r < Real(0.995, 64)) {
            const Real bound = abs(t) * r / (1L - r);
            if (bound <= target) return {sum, bound, k + 1};
          }
        }
      }
      throw NoConvergence("geometric series did not converge");
    }
    case Decay::kAlternating: {
      // Direct summation while the observed decay reaches the target within
      // the budget; otherwise extrapolate.
      // Geometric decay doubles log|t_a / t_2a| when the window doubles;
      // algebraic decay keeps it constant.
      constexpr long kProbe = 32;
      constexpr long kDirectBudget = 1L << 16;
      Real probe_quarter(wp), probe_mid(wp);
      for (long k = 0; k < opts.max_terms; ++k) {
        const Real t = term(opts.start + k);
        if (abs(t) <= target && k > 0) {
          // The first omitted term bounds the remainder; include half of it.
          return {sum + ldexp(t, -1), abs(t), k + 1};
        }
        sum += t;
        if (k == kProbe / 4) probe_quarter = abs(t);
        if (k == kProbe / 2) probe_mid = abs(t);
        if (k == kProbe && !t.is_zero() && !probe_mid.is_zero() && !probe_quarter.is_zero()) {
          const double l1 = std::log((probe_quarter / probe_mid).to_double());
          const double l2 = std::log((probe_mid / abs(t)).to_double());
          const bool geometric = l1 > 0 && l2 > 1.6 * l1;
          const double need =
              geometric ? std::log((abs(t) / target).to_double()) / (l2 / (kProbe / 2)) : HUGE_VAL;
          if (need > static_cast<double>(kDirectBudget)) {
            return richardson(term, opts.start, sum, k + 1, ctx, opts, target);
          }
        }
      }
      throw NoConvergence("alternating series did not converge");
    }
    case Decay::kPowerLaw:
      return richardson(term, opts.start, sum, 0, ctx, opts, target);
  }
  throw std::logic_error("unreachable");
}

}  // namespace hypint
