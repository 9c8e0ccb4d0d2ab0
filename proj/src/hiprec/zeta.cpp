#include "hypint/hiprec/zeta.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hypint/errors.hpp"
#include "hypint/exact/numbers.hpp"

namespace hypint {

namespace {

using Weights = std::vector<Real>;

// B_{2j} / (2j)! for j = 1..count, cached per precision.
std::shared_ptr<const Weights> bernoulli_weights(mpfr_prec_t prec, std::size_t count) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, std::shared_ptr<const Weights>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(prec);
    if (it != cache.end() && it->second->size() >= count) return it->second;
  }
  auto w = std::make_shared<Weights>();
  w->reserve(count);
  for (std::size_t j = 1; j <= count; ++j) {
    const unsigned n = static_cast<unsigned>(2 * j);
    w->emplace_back(bernoulli(n) / BigRational(factorial(n)), prec);
  }
  std::lock_guard lock(mu);
  auto& slot = cache[prec];
  if (!slot || slot->size() < w->size()) slot = w;
  return slot;
}

// Euler-Maclaurin pieces of zeta(s, a) with the x^{1-s}/(s-1) term kept apart,
// so callers can take differences that stay finite at s = 1.
struct EmParts {
  Real regular;
  Real regular_d;
  Real pole;    // x^{1-s}/(s-1), zero at s = 1
  Real pole_d;  // its s-derivative
  Real log_x;
};

EmParts euler_maclaurin(const Real& s_in, const Real& a_in, mpfr_prec_t wp, bool deriv) {
  if (a_in.sign() <= 0) throw DomainError("Hurwitz zeta requires a > 0");
  const double sd = s_in.to_double();
  const double ad = a_in.to_double();
  const long m = static_cast<long>(std::ceil(0.7 * static_cast<double>(wp)) + std::ceil(std::fabs(sd)));
  const double log2x = std::log2(ad + static_cast<double>(m));
  // Cancellation between the direct sum and the x^{1-s} term.
  double extra = 24 + std::max(0.0, 1.0 - sd) * log2x + std::log2(static_cast<double>(m));
  if (std::fabs(sd - 1) < 1 && sd != 1) extra += -std::log2(std::fabs(sd - 1));
  const mpfr_prec_t p = wp + static_cast<mpfr_prec_t>(extra);

  const Real s = s_in.rounded(p);
  const Real a = a_in.rounded(p);
  const bool int_s = s.is_integer() && std::fabs(sd) < 1e9;
  const long si = int_s ? s.to_long() : 0;
  const Real neg_s = -s;

  auto power = [&](const Real& t, const Real& log_t) {
    return int_s ? pow(t, -si) : exp(neg_s * log_t);
  };

  Real sum(p), dsum(p);
  Real scale(p), dscale(p);
  for (long n = 0; n < m; ++n) {
    const Real t = a + n;
    const Real lt = log(t);
    const Real term = power(t, lt);
    sum += term;
    scale = max(scale, abs(term));
    if (deriv) {
      const Real dt = lt * term;
      dsum -= dt;
      dscale = max(dscale, abs(dt));
    }
  }

  const Real x = a + m;
  const Real lx = log(x);
  const Real xs = power(x, lx);

  EmParts out{Real(p), Real(p), Real(p), Real(p), lx};
  if (!(s == 1L)) {
    const Real sm1 = s - 1L;
    out.pole = x * xs / sm1;
    out.pole_d = -(lx * out.pole) - out.pole / sm1;
  }

  Real half = ldexp(xs, -1);
  sum += half;
  if (deriv) dsum -= lx * half;
  scale = max(scale, abs(half));
  scale = max(scale, abs(out.pole));
  dscale = max(dscale, abs(out.pole_d));

  const Real eps = ldexp(Real(1L, 64), -static_cast<long>(p));
  const Real x2 = x * x;
  Real xp = xs / x;
  Real r = s;
  Real rd(1L, p);
  const std::size_t max_terms = static_cast<std::size_t>(3.2 * (ad + static_cast<double>(m))) + 8;
  std::shared_ptr<const Weights> w = bernoulli_weights(p, std::min<std::size_t>(max_terms, 64));
  for (std::size_t j = 1;; ++j) {
    if (j > max_terms) throw NoConvergence("Euler-Maclaurin tail did not converge");
    if (j > w->size()) w = bernoulli_weights(p, std::min(max_terms, 2 * w->size()));
    const Real& bj = (*w)[j - 1];
    const Real term = bj * r * xp;
    sum += term;
    bool done = abs(term) <= eps * scale;
    if (deriv) {
      const Real dterm = bj * (rd - r * lx) * xp;
      dsum += dterm;
      done = done && abs(dterm) <= eps * dscale;
    }
    if (done) break;
    const Real f1 = s + static_cast<long>(2 * j - 1);
    const Real f2 = s + static_cast<long>(2 * j);
    rd = rd * f1 * f2 + r * (f1 + f2);
    r = r * f1 * f2;
    xp /= x2;
  }
  out.regular = sum;
  out.regular_d = dsum;
  return out;
}

void require_not_pole(const Real& s) {
  if (s == 1L) throw PoleError("zeta(s, a) has a pole at s = 1");
}

Real four_pow_neg(const Real& s) {
  return exp(-(s * const_log2(s.prec()) * 2L));
}

}  // namespace

ZetaWithDeriv hurwitz_zeta_both(const Real& s, const Real& a, const PrecisionContext& ctx) {
  require_not_pole(s);
  const mpfr_prec_t wp = ctx.working();
  EmParts e = euler_maclaurin(s, a, wp, true);
  return {(e.regular + e.pole).rounded(wp), (e.regular_d + e.pole_d).rounded(wp)};
}

Real hurwitz_zeta(const Real& s, const Real& a, const PrecisionContext& ctx) {
  require_not_pole(s);
  const mpfr_prec_t wp = ctx.working();
  EmParts e = euler_maclaurin(s, a, wp, false);
  return (e.regular + e.pole).rounded(wp);
}

Real hurwitz_zeta_sderiv(const Real& s, const Real& a, const PrecisionContext& ctx) {
  return hurwitz_zeta_both(s, a, ctx).deriv;
}

ZetaWithDeriv hurwitz_difference(const Real& s, const Real& a1, const Real& a2,
                                 const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  EmParts e1 = euler_maclaurin(s, a1, wp, true);
  EmParts e2 = euler_maclaurin(s, a2, wp, true);
  Real value = e1.regular - e2.regular;
  Real deriv = e1.regular_d - e2.regular_d;
  if (s == 1L) {
    // Limits of the pole-term difference and of its derivative.
    value += e2.log_x - e1.log_x;
    deriv += ldexp(e1.log_x * e1.log_x - e2.log_x * e2.log_x, -1);
  } else {
    value += e1.pole - e2.pole;
    deriv += e1.pole_d - e2.pole_d;
  }
  return {value.rounded(wp), deriv.rounded(wp)};
}

Real riemann_zeta(const Real& s, const PrecisionContext& ctx) {
  return hurwitz_zeta(s, Real(1L, ctx.working()), ctx);
}

Real riemann_zeta(long s, const PrecisionContext& ctx) {
  return riemann_zeta(Real(s, ctx.working()), ctx);
}

Real zeta_sderiv(const Real& s, const PrecisionContext& ctx) {
  return hurwitz_zeta_sderiv(s, Real(1L, ctx.working()), ctx);
}

namespace {

ZetaWithDeriv quarter_difference(const Real& s, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  const Real q1 = ldexp(Real(1L, wp), -2);
  const Real q3 = ldexp(Real(3L, wp), -2);
  return hurwitz_difference(s, q1, q3, ctx);
}

}  // namespace

Real dirichlet_beta(const Real& s, const PrecisionContext& ctx) {
  const Real sw = s.rounded(std::max(s.prec(), ctx.working()));
  return four_pow_neg(sw) * quarter_difference(sw, ctx).value;
}

Real dirichlet_beta(long s, const PrecisionContext& ctx) {
  return dirichlet_beta(Real(s, ctx.working()), ctx);
}

Real beta_sderiv(const Real& s, const PrecisionContext& ctx) {
  const Real sw = s.rounded(std::max(s.prec(), ctx.working()));
  const ZetaWithDeriv d = quarter_difference(sw, ctx);
  const Real f = four_pow_neg(sw);
  const Real log4 = const_log2(sw.prec()) * 2L;
  return f * d.deriv - log4 * f * d.value;
}

Real dirichlet_eta(const Real& s, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  if (s == 1L) return const_log2(wp);
  const Real two = Real(2L, wp);
  return (1L - pow(two, 1L - s)) * riemann_zeta(s, ctx);
}

Real dirichlet_lambda(const Real& s, const PrecisionContext& ctx) {
  require_not_pole(s);
  const Real two = Real(2L, ctx.working());
  return (1L - pow(two, -s)) * riemann_zeta(s, ctx);
}

Real zeta_sderiv_neg_even(int k, const PrecisionContext& ctx) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const mpfr_prec_t wp = ctx.working();
  const Real two_pi = const_pi(wp) * 2L;
  Real r = Real(factorial(2 * k), wp) * pow(two_pi, -2L * k) * riemann_zeta(2L * k + 1, ctx);
  r = ldexp(r, -1);
  return sign_pow(k) > 0 ? r : -r;
}

Real beta_sderiv_neg_odd(int k, const PrecisionContext& ctx) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const mpfr_prec_t wp = ctx.working();
  const Real two_over_pi = Real(2L, wp) / const_pi(wp);
  Real r = Real(factorial(2 * k - 1), wp) * pow(two_over_pi, 2L * k - 1) *
           dirichlet_beta(2L * k, ctx);
  return sign_pow(k + 1) > 0 ? r : -r;
}

Real beta_sderiv_neg_even(int k, const PrecisionContext& ctx) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return beta_sderiv(Real(-2L * k, ctx.working()), ctx);
}

}  // namespace hypint
