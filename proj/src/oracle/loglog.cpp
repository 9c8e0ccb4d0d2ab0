#include "hypint/oracle/loglog.hpp"

#include <vector>

#include "hypint/errors.hpp"
#include "hypint/hiprec/zeta.hpp"

namespace hypint {

namespace {

// One weight piece (c4 x^4 + c2 x^2 + c0) x^m / (x^2+1)^b scaled by coeff.
// With x = e^t = 1/y the integrand W(x) x log t becomes
//   (c4 + c2 y^2 + c0 y^4) y^{2b-m-5} / (1+y^2)^b log t,
// which stays finite for every t > 0.
struct Piece {
  Real coeff;
  Real c4, c2, c0;
  Real m;
  Real b;
};

Integrand make_integrand(std::vector<Piece> pieces) {
  return [pieces = std::move(pieces)](const Real& t) {
    const Real y = exp(-t);
    const Real y2 = y * y;
    const Real lt = log(t);
    const Real one_y2 = 1 + y2;
    Real sum(0L, t.prec());
    for (const Piece& p : pieces) {
      const Real poly = p.c4 + y2 * (p.c2 + y2 * p.c0);
      const Real e = 2 * p.b - p.m - 5;
      Real v = p.coeff * poly / pow(one_y2, p.b);
      if (!e.is_zero()) v *= y.is_zero() ? Real(0L, t.prec()) : pow(y, e);
      sum += v;
    }
    return sum * lt;
  };
}

Real num(long v, mpfr_prec_t wp) { return Real(v, wp); }

std::vector<Piece> weight(LogLogKind kind, int n, mpfr_prec_t wp) {
  if (n < 1) throw DomainError("loglog weight: N must be >= 1");
  std::vector<Piece> out;
  const int outer = sign_pow(n);
  if (kind == LogLogKind::kBeta) {
    for (int k = 0; k < n; ++k) {
      BigInt c = 0;
      for (int j = 0; j <= k; ++j) {
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 2UL * j + 1, 2UL * n - 1);
        c += binomial(2 * k + 1, k - j) * sign_pow(j + 1) * pw;
      }
      c *= outer;
      out.push_back({Real(c, wp), num(2 * k + 1, wp), num(-2 * (2 * k + 3), wp), num(2 * k + 1, wp),
                     num(2 * k, wp), num(2 * k + 3, wp)});
    }
  } else {
    for (int k = 1; k <= n; ++k) {
      BigInt c = 0;
      for (int j = 1; j <= k; ++j) {
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 2UL * j, 2UL * n);
        c += binomial(2 * k, k - j) * sign_pow(j) * pw;
      }
      c *= outer;
      out.push_back({Real(c, wp), num(2 * k, wp), num(-2 * (2 * k + 2), wp), num(2 * k, wp),
                     num(2 * k - 1, wp), num(2 * k + 2, wp)});
    }
  }
  return out;
}

}  // namespace

QuadratureResult integrate_loglog(LogLogKind kind, int n, const PrecisionContext& ctx,
                                  const QuadratureOptions& opts) {
  // The pieces cancel heavily for larger N; carry extra bits.
  const PrecisionContext wide = ctx.widened(static_cast<unsigned>(8 * n + 8));
  QuadratureOptions o = opts;
  if (!o.target) o.target = default_target(ctx);
  QuadratureResult r = integrate_semi_infinite(make_integrand(weight(kind, n, wide.working())), wide, o);
  r.value = r.value.rounded(ctx.working());
  return r;
}

Real loglog_expected(LogLogKind kind, int n, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  const Real pi = const_pi(wp);
  if (kind == LogLogKind::kBeta) {
    const BigRational c = pow2(2L * n - 1) * BigRational(factorial(static_cast<unsigned>(2 * n - 1)));
    return Real(c, wp) * dirichlet_beta(2L * n, ctx) / pow(pi, 2L * n - 1);
  }
  const BigRational c = (pow2(2L * n + 1) - 1) * BigRational(factorial(static_cast<unsigned>(2 * n))) / 2;
  return Real(c, wp) * riemann_zeta(2L * n + 1, ctx) / pow(pi, 2L * n);
}

QuadratureResult blagouchine_beta2(const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  return integrate_semi_infinite(
      make_integrand({{num(1, wp), num(1, wp), num(-6, wp), num(1, wp), num(0, wp), num(3, wp)}}), ctx);
}

QuadratureResult blagouchine_zeta3(const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  return integrate_semi_infinite(
      make_integrand({{num(1, wp), num(1, wp), num(-4, wp), num(1, wp), num(1, wp), num(4, wp)}}), ctx);
}

QuadratureResult loglog_tanh_sech(const Real& l, const PrecisionContext& ctx) {
  if (l.sign() <= 0) throw DomainError("loglog_tanh_sech: L must be > 0");
  const mpfr_prec_t wp = ctx.working();
  const Real lw = l.rounded(wp);
  const Real scale = pow(Real(2L, wp), lw);
  return integrate_semi_infinite(
      make_integrand({{scale, lw, -2 * (lw + 2), lw, lw - 1, lw + 2}}), ctx);
}

}  // namespace hypint
