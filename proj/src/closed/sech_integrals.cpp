#include "hypint/closed/sech_integrals.hpp"

#include <cmath>
#include <string>

#include "hypint/errors.hpp"
#include "hypint/hiprec/gamma.hpp"

namespace hypint {

namespace {

// Pieces shared by the even and odd closed forms. With m = floor(L/2) and
// q the parity offset (0 for even, 1 for odd), factors run over n = 2j + q:
//   base  = the L <= 1 integral (psi difference form),
//   prod  = prod_{j} (n_j^2 - T^2) over the leading factors,
//   tail  = sum_j [prod_{i > j} (n_i^2 - T^2) / (n_i (n_i + 1))] / (n_j (n_j + 1)).
struct Pieces {
  Real base;
  Real prod;
  Real tail;
  int power;  // the sech power L
};

Real quarter_shift(const Real& t, long shift) { return ldexp(t + shift, -2); }

PrecisionContext widen_for(int l, const Real& t, const PrecisionContext& ctx) {
  // The product grows like T^L while the integral decays like 1/T.
  const double tt = std::abs(t.to_double()) + 2.0;
  return ctx.widened(static_cast<unsigned>(std::ceil((l + 2) * std::log2(tt))) + 8);
}

Pieces pieces(int l, const Real& t, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  const Real t2 = t * t;
  const bool odd = (l % 2) == 1;
  const int m = odd ? (l - 1) / 2 : l / 2;
  Pieces p{Real(wp), Real(1L, wp), Real(0L, wp), l};
  if (odd) {
    // int sech e^{-Tx} = (psi((T+3)/4) - psi((T+1)/4)) / 2
    p.base = ldexp(digamma(quarter_shift(t, 3), ctx) - digamma(quarter_shift(t, 1), ctx), -1);
    for (int j = 0; j < m; ++j) p.prod *= Real(static_cast<long>((2 * j + 1) * (2 * j + 1)), wp) - t2;
    for (int j = 0; j < m; ++j) {
      Real term(1L, wp);
      for (int i = j + 1; i < m; ++i) {
        const long n = 2L * i + 1;
        term *= (Real(n * n, wp) - t2) / (n * (n + 1));
      }
      const long n = 2L * j + 1;
      p.tail += term / (n * (n + 1));
    }
  } else {
    // int sech^2 e^{-Tx} = 1 - T/2 (psi((T+4)/4) - psi((T+2)/4))
    p.base = 1 - ldexp(t * (digamma(quarter_shift(t, 4), ctx) - digamma(quarter_shift(t, 2), ctx)), -1);
    for (int j = 1; j < m; ++j) p.prod *= Real(static_cast<long>(4 * j * j), wp) - t2;
    for (int j = 1; j < m; ++j) {
      Real term(1L, wp);
      for (int i = j + 1; i < m; ++i) {
        const long n = 2L * i;
        term *= (Real(n * n, wp) - t2) / (n * (n + 1));
      }
      const long n = 2L * j;
      p.tail += term / (n * (n + 1));
    }
  }
  return p;
}

void check_t(const Real& t) {
  if (t.sign() < 0) throw DomainError("negative T is outside the supported domain");
}

}  // namespace

Real sech_power_exp(int l, const Real& t, const PrecisionContext& ctx) {
  check_t(t);
  if (l < 0) throw DomainError("sech_power_exp: negative L");
  if (l == 0) {
    if (t.is_zero()) throw DomainError("sech_power_exp: L = T = 0 diverges");
    return 1 / t;
  }
  const PrecisionContext wide = widen_for(l, t, ctx);
  const Real tw = t.rounded(wide.working());
  const Pieces p = pieces(l, tw, wide);
  // 1/(L-1)! prod * base + T * tail
  const Real lead = p.prod * p.base / Real(factorial(static_cast<unsigned>(l - 1)), wide.working());
  return (lead + tw * p.tail).rounded(ctx.working());
}

Real sech_power_exp(const Real& l, const Real& t, const PrecisionContext& ctx) {
  if (!l.is_integer()) {
    throw UnsupportedParameter("sech_power_exp: non-integer L " + l.to_string(12) +
                               " has no closed form; use the quadrature oracle");
  }
  return sech_power_exp(static_cast<int>(l.to_long()), t, ctx);
}

Real tanh_sech_power_exp(int l, const Real& t, const PrecisionContext& ctx) {
  check_t(t);
  if (l < 1) throw DomainError("tanh_sech_power_exp: L must be >= 1");
  const PrecisionContext wide = widen_for(l + 1, t, ctx);
  const mpfr_prec_t wp = wide.working();
  const Real tw = t.rounded(wp);
  const Pieces p = pieces(l, tw, wide);
  // -T/L! prod * base - T^2 tail / L + 1/L
  Real v = -(tw * p.prod * p.base) / Real(factorial(static_cast<unsigned>(l)), wp);
  v -= tw * tw * p.tail / static_cast<long>(l);
  v += Real(1L, wp) / static_cast<long>(l);
  return v.rounded(ctx.working());
}

}  // namespace hypint
