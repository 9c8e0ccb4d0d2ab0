#include "hypint/oracle/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hypint/errors.hpp"

namespace hypint {

namespace {

struct Node {
  int side;  // sign of t
  Real x;         // abscissa (exp-sinh) or endpoint distance (tanh-sinh, scaled to [0, 1])
  Real w;
};

enum class Rule { kExpSinh, kTanhSinh };

// Bits of decay the node tables resolve. Toward a finite endpoint the
// budget is doubled so that x^-1/2 singularities still truncate below
// 2^-(wp + 40).
long far_bits(mpfr_prec_t wp) { return static_cast<long>(wp) + 40; }
long near_bits(mpfr_prec_t wp) { return 2 * far_bits(wp); }

// Largest |t| at which the transformed weights still exceed 2^-bits.
double t_cap(long bits) { return std::asinh(2.0 / M_PI * static_cast<double>(bits) * std::log(2.0)) + 0.25; }

// Nodes new at this level: t = k h with k odd (all k at level 0).
std::vector<Node> build_level(Rule rule, int level, mpfr_prec_t wp) {
  const long inv_h = 1L << level;
  const long kmax = static_cast<long>(std::floor(t_cap(far_bits(wp)) * static_cast<double>(inv_h)));
  const long kmin = static_cast<long>(std::floor(t_cap(near_bits(wp)) * static_cast<double>(inv_h)));
  const Real half_pi = ldexp(const_pi(wp), -1);
  std::vector<Node> nodes;
  const long last = rule == Rule::kTanhSinh ? kmin : kmax;
  for (long k = rule == Rule::kTanhSinh ? 0 : -kmin; k <= last; ++k) {  // tanh-sinh is mirrored at evaluation
    if (level > 0 && k % 2 == 0) continue;
    const Real t = ldexp(Real(k, wp), -level);
    const Real u = half_pi * sinh(t);
    if (rule == Rule::kExpSinh) {
      const Real x = exp(u);
      nodes.push_back({k < 0 ? -1 : 1, x, half_pi * cosh(t) * x});
    } else {
      const Real cu = cosh(u);
      // 1 - tanh(u) = e^{-u} / cosh(u)
      const Real dist = exp(-u) / cu;
      nodes.push_back({1, dist, half_pi * cosh(t) / (cu * cu)});
    }
  }
  return nodes;
}

std::shared_ptr<const std::vector<Node>> level_nodes(Rule rule, int level, mpfr_prec_t wp) {
  static std::mutex mu;
  static std::map<std::tuple<Rule, int, mpfr_prec_t>, std::shared_ptr<const std::vector<Node>>> cache;
  const auto key = std::make_tuple(rule, level, wp);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto nodes = std::make_shared<const std::vector<Node>>(build_level(rule, level, wp));
  std::lock_guard lock(mu);
  return cache.emplace(key, nodes).first->second;
}

// Level-doubling driver. level_sum returns sum_{new nodes} f * w and the
// number of integrand calls.
template <typename LevelSum>
QuadratureResult drive(LevelSum level_sum, const PrecisionContext& ctx, const QuadratureOptions& opts) {
  const mpfr_prec_t wp = ctx.working();
  const Real target = opts.target ? *opts.target : default_target(ctx);
  Real estimate(wp);
  Real previous(wp);
  Real diff(wp);
  long calls = 0;
  for (int level = 0; level <= opts.max_level; ++level) {
    auto [partial, n] = level_sum(level);
    calls += n;
    const Real h = ldexp(Real(1L, wp), -level);
    // Each level halves h and adds the odd nodes.
    estimate = level == 0 ? partial * h : ldexp(estimate, -1) + partial * h;
    if (level > 0) {
      diff = abs(estimate - previous);
      if (level >= opts.min_level && diff <= target) {
        return {estimate, diff, calls, level};
      }
    }
    previous = estimate;
  }
  throw NoConvergence("quadrature did not reach target error; last level difference " +
                      diff.to_string(6));
}

}  // namespace

Real default_target(const PrecisionContext& ctx) {
  return ldexp(Real(1L, 64), -(static_cast<long>(ctx.bits) - 24));
}

QuadratureResult integrate_semi_infinite(const Integrand& f, const PrecisionContext& ctx,
                                         const QuadratureOptions& opts) {
  const mpfr_prec_t wp = ctx.working();
  const Real tiny = ldexp(Real(1L, 64), -far_bits(wp));
  const Real tiniest = ldexp(Real(1L, 64), -near_bits(wp));
  auto level_sum = [&](int level) {
    const auto nodes = level_nodes(Rule::kExpSinh, level, wp);
    Real sum(wp);
    long calls = 0;
    int small_run = 0;
    for (const Node& nd : *nodes) {
      if (nd.side > 0) continue;
      if (nd.w < tiniest) continue;
      sum += f(nd.x) * nd.w;
      ++calls;
    }
    // Right half from t = 0 outward, stopping once the integrand has died off.
    for (const Node& nd : *nodes) {
      if (nd.side < 0) continue;
      const Real term = f(nd.x) * nd.w;
      ++calls;
      sum += term;
      small_run = abs(term) <= tiny * max(abs(sum), Real(1L, 16)) ? small_run + 1 : 0;
      if (small_run >= 3 && nd.x > 1L) break;
    }
    return std::make_pair(sum, calls);
  };
  return drive(level_sum, ctx, opts);
}

QuadratureResult integrate_interval(const Integrand& f, const Real& a_in, const Real& b_in,
                                    const PrecisionContext& ctx, const QuadratureOptions& opts) {
  const mpfr_prec_t wp = ctx.working();
  const Real a = a_in.rounded(wp);
  const Real b = b_in.rounded(wp);
  if (!(a < b)) throw std::invalid_argument("integrate_interval requires a < b");
  const Real half_len = ldexp(b - a, -1);
  const Real mid = ldexp(a + b, -1);
  const Real tiny = ldexp(Real(1L, 64), -near_bits(wp));
  auto level_sum = [&](int level) {
    const auto nodes = level_nodes(Rule::kTanhSinh, level, wp);
    Real sum(wp);
    long calls = 0;
    for (const Node& nd : *nodes) {
      if (nd.w < tiny) continue;
      const Real d = half_len * nd.x;
      if (nd.x == 1L) {
        sum += f(mid) * nd.w;
        ++calls;
        continue;
      }
      // Distances below an ulp of the endpoint would sample the endpoint itself.
      const Real left = a + d;
      const Real right = b - d;
      if (left != a) {
        sum += f(left) * nd.w;
        ++calls;
      }
      if (right != b) {
        sum += f(right) * nd.w;
        ++calls;
      }
    }
    return std::make_pair(sum * half_len, calls);
  };
  return drive(level_sum, ctx, opts);
}

}  // namespace hypint
