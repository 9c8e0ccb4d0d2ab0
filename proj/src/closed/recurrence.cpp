#include "hypint/closed/recurrence.hpp"

#include <algorithm>
#include <string>

#include "hypint/errors.hpp"
#include "hypint/exact/tables.hpp"
#include "hypint/hiprec/zeta.hpp"

namespace hypint {

namespace {

// (2 - 2^{-2k}) (2k)!
BigRational zeta_weight(int k) {
  return (2 - pow2(-2L * k)) * BigRational(factorial(static_cast<unsigned>(2 * k)));
}

// 2^{2N} / (N^2 C(2N, N))
BigRational zeta_prefactor(int n) {
  return pow2(2L * n) / BigRational(BigInt(n) * n * binomial(2 * n, n));
}

// sum_k c_k f(k) / pi^{p k + q}
template <typename F>
Real combine(const std::vector<BigRational>& c, F value, int p, int q, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  const Real pi = const_pi(wp);
  Real sum(0L, wp);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    if (c[i] == 0) continue;
    sum += Real(c[i], wp) * value(k) / pow(pi, static_cast<long>(p * k + q));
  }
  return sum;
}

}  // namespace

std::vector<BigRational> beta_recurrence_coefficients(int n) {
  if (n < 0) throw DomainError("beta recurrence: N must be >= 0");
  const CoeffTable g = g_table(std::max(n, 1));
  const BigRational pre =
      BigRational(binomial(2 * n, n)) / (BigRational(2 * n + 1) * pow2(2L * n));
  std::vector<BigRational> c;
  for (int k = 1; k <= n + 1; ++k) {
    c.push_back(pre * pow2(2L * k) * BigRational(factorial(static_cast<unsigned>(2 * k - 1))) *
                g.at(n + 1, k));
  }
  return c;
}

Real beta_recurrence_eval(int n, const PrecisionContext& ctx) {
  return combine(
      beta_recurrence_coefficients(n), [&](int k) { return dirichlet_beta(2L * k, ctx); }, 2, -1,
      ctx);
}

ConstantCombination beta_recurrence_combination(int n) {
  if (n > 1) {
    throw UnsupportedParameter("beta recurrence N = " + std::to_string(n) +
                               " needs beta(2k) beyond the named basis");
  }
  const auto c = beta_recurrence_coefficients(n);
  ConstantCombination out;
  out.set(Basis::kBeta2, c[0]);
  if (n == 1) out.set(Basis::kBeta4, c[1]);
  return out;
}

std::vector<BigRational> zeta_recurrence_coefficients(int n) {
  if (n < 1) throw DomainError("zeta recurrence: N must be >= 1");
  const CoeffTable h = h_table(n);
  const BigRational pre = zeta_prefactor(n);
  std::vector<BigRational> c;
  for (int k = 1; k <= n; ++k) c.push_back(pre * zeta_weight(k) * h.at(n, k));
  return c;
}

Real zeta_recurrence_eval(int n, const PrecisionContext& ctx) {
  return combine(
      zeta_recurrence_coefficients(n), [&](int k) { return riemann_zeta(2L * k + 1, ctx); }, 2, 0,
      ctx);
}

ConstantCombination zeta_recurrence_combination(int n) {
  if (n > 2) {
    throw UnsupportedParameter("zeta recurrence N = " + std::to_string(n) +
                               " needs zeta(2k+1) beyond the named basis");
  }
  const auto c = zeta_recurrence_coefficients(n);
  ConstantCombination out;
  out.set(Basis::kZeta3, c[0]);
  if (n == 2) out.set(Basis::kZeta5, c[1]);
  return out;
}

std::vector<BigRational> tanh_over_x_power_coefficients(int n) {
  if (n < 2) throw DomainError("tanh_over_x_power: N must be >= 2");
  const CoeffTable d = dN_table(n);
  const CoeffTable h = h_table(n - 1);
  const BigRational inv_fact = 1 / BigRational(factorial(static_cast<unsigned>(n - 1)));
  std::vector<BigRational> c;
  for (int k = 1; k <= n - 1; ++k) {
    BigRational inner = 0;
    for (int j = k; j <= n - 1; ++j) {
      const BigRational& dj = d.at(n - 1, 2 * j);
      if (dj == 0) continue;
      inner += dj * pow2(2L * j) / BigRational(BigInt(j) * j * binomial(2 * j, j)) * h.at(j, k);
    }
    c.push_back(inv_fact * inner * zeta_weight(k));
  }
  return c;
}

PowerIntegral tanh_over_x_power(int n, const PrecisionContext& ctx) {
  auto c = tanh_over_x_power_coefficients(n);
  // Alternating coefficients of growing size: widen by their magnitude.
  long bits = 0;
  for (const auto& q : c) {
    if (q != 0) bits = std::max<long>(bits, static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)));
  }
  const PrecisionContext wide = ctx.widened(static_cast<unsigned>(bits) + 8);
  Real v = combine(c, [&](int k) { return riemann_zeta(2L * k + 1, wide); }, 2, 0, wide);
  return {v.rounded(ctx.working()), std::move(c)};
}

Real infinite_product_beta2(long terms, const PrecisionContext& ctx) {
  if (terms < 1) throw DomainError("infinite_product_beta2: terms must be >= 1");
  const mpfr_prec_t wp = ctx.working() + 32;
  // log of exp(-1/2) ((4k+3)/(4k+1))^{k+1/2} = -1/2 + (k+1/2) log1p(2/(4k+1))
  Real sum(0L, wp);
  for (long k = 0; k < terms; ++k) {
    const Real ratio = Real(2L, wp) / (4 * k + 1);
    sum += (Real(2 * k + 1, wp) * log1p(ratio) - 1) / 2;
  }
  const Real pi = const_pi(wp);
  const Real v = pi * const_log2(wp) / 4 + 2 * pi * sum;
  return v.rounded(ctx.working());
}

Real infinite_product_zdot(long terms, const PrecisionContext& ctx) {
  if (terms < 1) throw DomainError("infinite_product_zdot: terms must be >= 1");
  const mpfr_prec_t wp = ctx.working() + 32;
  // 1/2 + (k + 3/4) log((2k+1)/(2k+2)) = 1/2 - (k + 3/4) log1p(1/(2k+1))
  Real sum(0L, wp);
  for (long k = 0; k < terms; ++k) {
    const Real ratio = Real(1L, wp) / (2 * k + 1);
    sum += Real(1L, wp) / 2 - Real(4 * k + 3, wp) * log1p(ratio) / 4;
  }
  const Real log2 = const_log2(wp);
  const Real logpi = log(const_pi(wp));
  Real v = Real(1L, wp) / 12 - 7 * log2 / 36 - logpi / 12 + 2 * sum / 3;
  return v.rounded(ctx.working());
}

}  // namespace hypint
