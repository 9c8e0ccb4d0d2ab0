#include "hypint/identity/ramanujan.hpp"

#include <string>

#include "hypint/errors.hpp"
#include "hypint/exact/numbers.hpp"
#include "hypint/hiprec/zeta.hpp"
#include "hypint/oracle/series.hpp"

namespace hypint {

namespace {

// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
Real zeta_even(int k, mpfr_prec_t wp) {
  const BigRational c = sign_pow(k + 1) * bernoulli(static_cast<unsigned>(2 * k)) * pow2(2L * k) /
                        (2 * BigRational(factorial(static_cast<unsigned>(2 * k))));
  return Real(c, wp) * pow(const_pi(wp), 2L * k);
}

// beta(2k+1) = (-1)^k E_{2k} pi^{2k+1} / (4^{k+1} (2k)!)
Real beta_odd(int k, mpfr_prec_t wp) {
  const BigRational c = sign_pow(k) * euler_number(static_cast<unsigned>(2 * k)) * pow2(-2L * (k + 1)) /
                        BigRational(factorial(static_cast<unsigned>(2 * k)));
  return Real(c, wp) * pow(const_pi(wp), 2L * k + 1);
}

Real geometric_sum(const SeriesTerm& term, long start, const PrecisionContext& ctx, Real& err) {
  SeriesOptions opts;
  opts.decay = Decay::kGeometric;
  opts.start = start;
  opts.target = ldexp(Real(1L, ctx.working()), -static_cast<long>(ctx.working()));
  const SeriesResult r = sum_series(term, ctx, opts);
  err += r.est_error;
  return r.value;
}

// e^{-2y} / (1 - e^{-2y}) and e^{-2y} / (1 + e^{-2y}) for y > 0.
Real coth_tail(const Real& y) {
  const Real e = exp(-2 * y);
  return 2 * e / -expm1(-2 * y);
}
Real tanh_tail(const Real& y) {
  const Real e = exp(-2 * y);
  return 2 * e / (1 + e);
}
Real csch_pos(const Real& y) {
  const Real e = exp(-y);
  return 2 * e / -expm1(-2 * y);
}

// sum over n >= 1 of coth(a pi n) / n^q (coth) or (-1)^n csch(a pi n) / n^q,
// and the odd-index sums for sech and tanh, all for a > 0.
Real hyperbolic_sum(RamanujanKind kind, const Real& a, int q, const PrecisionContext& ctx, Real& err) {
  const mpfr_prec_t wp = ctx.working();
  const Real api = a * const_pi(wp);
  switch (kind) {
    case RamanujanKind::kCoth: {
      // coth = 1 + (coth - 1)
      const Real tail = geometric_sum(
          [&](long n) { return coth_tail(api * n) / pow(Real(n, wp), static_cast<long>(q)); }, 1, ctx, err);
      return riemann_zeta(static_cast<long>(q), ctx) + tail;
    }
    case RamanujanKind::kCsch:
      return geometric_sum(
          [&](long n) { return sign_pow(n) * csch_pos(api * n) / pow(Real(n, wp), static_cast<long>(q)); },
          1, ctx, err);
    case RamanujanKind::kSech:
      return geometric_sum(
          [&](long n) {
            const Real y = api * Real(2 * n + 1, wp) / 2;
            return sign_pow(n) * sech(y) / pow(Real(2 * n + 1, wp), static_cast<long>(q));
          },
          0, ctx, err);
    case RamanujanKind::kTanh: {
      // tanh = 1 - (1 - tanh); sum of odd n^-q is (1 - 2^-q) zeta(q)
      const Real tail = geometric_sum(
          [&](long n) {
            const Real y = api * Real(2 * n + 1, wp) / 2;
            return tanh_tail(y) / pow(Real(2 * n + 1, wp), static_cast<long>(q));
          },
          0, ctx, err);
      const Real lambda = (1 - pow(Real(2L, wp), -static_cast<long>(q))) * riemann_zeta(static_cast<long>(q), ctx);
      return lambda - tail;
    }
  }
  throw std::logic_error("unreachable");
}

bool odd_function(RamanujanKind k) { return k != RamanujanKind::kSech; }

Real signed_sum(RamanujanKind kind, const Real& a, int q, const PrecisionContext& ctx, Real& err) {
  const Real v = hyperbolic_sum(kind, abs(a), q, ctx, err);
  return (a.sign() < 0 && odd_function(kind)) ? -v : v;
}

}  // namespace

std::string_view ramanujan_name(RamanujanKind k) {
  switch (k) {
    case RamanujanKind::kCoth: return "coth";
    case RamanujanKind::kSech: return "sech";
    case RamanujanKind::kCsch: return "csch";
    case RamanujanKind::kTanh: return "tanh";
  }
  return "coth";
}

std::optional<RamanujanKind> parse_ramanujan(std::string_view name) {
  for (auto k : {RamanujanKind::kCoth, RamanujanKind::kSech, RamanujanKind::kCsch, RamanujanKind::kTanh}) {
    if (ramanujan_name(k) == name) return k;
  }
  return std::nullopt;
}

RamanujanSides ramanujan_sides(RamanujanKind kind, const Real& alpha_in, int n,
                               const PrecisionContext& ctx) {
  if (alpha_in.is_zero()) throw DomainError("Ramanujan identities need alpha != 0");
  const int min_n = kind == RamanujanKind::kSech ? 0 : 1;
  if (n < min_n) throw DomainError("Ramanujan identity: N below its range");
  const mpfr_prec_t wp = ctx.working();
  const Real alpha = alpha_in.rounded(wp);
  const Real inv = 1L / alpha;
  const Real pi = const_pi(wp);
  const Real neg_alpha = -alpha;
  const int q = 2 * n + 1;
  Real err(0L, wp);
  const Real s1 = signed_sum(kind, alpha, q, ctx, err);
  const Real s2 = signed_sum(kind, inv, q, ctx, err);
  const Real a_mn = pow(alpha, -static_cast<long>(n));
  const Real na_n = pow(neg_alpha, static_cast<long>(n));
  auto apow = [&](long e) { return pow(alpha, e); };

  Real lhs(wp), rhs(0L, wp);
  switch (kind) {
    case RamanujanKind::kCoth: {
      lhs = pi * a_mn * s1 - pi * na_n * s2;
      const Real z = zeta_even(n + 1, wp);
      rhs = z * apow(-n - 1) + z * pow(neg_alpha, static_cast<long>(n + 1));
      for (int k = 1; k <= n; ++k) {
        rhs -= 2 * sign_pow(k) * zeta_even(k, wp) * zeta_even(n + 1 - k, wp) * apow(2L * k - n - 1);
      }
      break;
    }
    case RamanujanKind::kSech: {
      lhs = pi / 4 * a_mn * s1 + pi / 4 * na_n * s2;
      for (int k = 0; k <= n; ++k) {
        rhs += sign_pow(k) * beta_odd(k, wp) * beta_odd(n - k, wp) * apow(2L * k - n);
      }
      break;
    }
    case RamanujanKind::kCsch: {
      lhs = pi * a_mn * s1 - pi * na_n * s2;
      const Real c = Real(1L - pow2(-2L * n - 1), wp) * zeta_even(n + 1, wp);
      rhs = -c * apow(-n - 1) - c * pow(neg_alpha, static_cast<long>(n + 1));
      for (int k = 1; k <= n; ++k) {
        const Real a = Real(1L - pow2(1L - 2 * k), wp) * zeta_even(k, wp);
        const Real b = Real(1L - pow2(2L * k - 2 * n - 1), wp) * zeta_even(n + 1 - k, wp);
        rhs -= 2 * sign_pow(k) * a * b * apow(2L * k - n - 1);
      }
      break;
    }
    case RamanujanKind::kTanh: {
      lhs = pi / 4 * a_mn * s1 - pi / 4 * na_n * s2;
      for (int k = 1; k <= n; ++k) {
        const Real a = Real(1L - pow2(-2L * k), wp) * zeta_even(k, wp);
        const Real b = Real(1L - pow2(2L * k - 2 * n - 2), wp) * zeta_even(n + 1 - k, wp);
        rhs += sign_pow(k + 1) * a * b * apow(2L * k - n - 1);
      }
      break;
    }
  }
  return {lhs, rhs, err * pi * max(abs(a_mn), abs(na_n))};
}

IdentityCase verify_ramanujan(RamanujanKind kind, const Real& alpha, int n,
                              const PrecisionContext& ctx, const TolerancePolicy& policy) {
  const std::string id = std::string(ramanujan_name(kind)) +
                         (kind == RamanujanKind::kSech ? "_beta" : "_zeta");
  nlohmann::json params = {{"alpha", param_value(alpha)}, {"N", n}};
  try {
    const RamanujanSides s = ramanujan_sides(kind, alpha, n, ctx);
    return make_case(id, params, s.lhs, s.rhs, s.series_error, ctx, policy);
  } catch (const Error& e) {
    return failed_case(id, params, e.what(), ctx);
  }
}

}  // namespace hypint
