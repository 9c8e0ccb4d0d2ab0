#include "hypint/exact/numbers.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "hypint/errors.hpp"

namespace hypint {

BigRational bernoulli(unsigned n) {
  static std::vector<BigRational> cache{BigRational(1)};
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    if (m > 1 && m % 2 == 1) {
      cache.emplace_back(0);
      continue;
    }
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    BigRational acc(0);
    for (unsigned k = 0; k < m; ++k) {
      if (cache[k] == 0) continue;
      acc += BigRational(binomial(m + 1, k)) * cache[k];
    }
    cache.push_back(-acc / BigRational(m + 1));
  }
  return cache[n];
}

BigRational bernoulli_poly(unsigned n, const BigRational& z) {
  // Horner in z over the coefficients C(n,k) B_{n-k}.
  BigRational acc(0);
  for (unsigned k = 0; k <= n; ++k) {
    acc = acc * z + BigRational(binomial(n, k)) * bernoulli(k);
  }
  return acc;
}

BigRational euler_number(unsigned m) {
  if (m % 2 == 1) return BigRational(0);
  static std::vector<BigRational> cache{BigRational(1)};  // E_0, E_2, ...
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  const unsigned half = m / 2;
  while (cache.size() <= half) {
    const unsigned n = static_cast<unsigned>(cache.size());
    BigRational acc(0);
    for (unsigned k = 0; k < n; ++k) {
      acc += BigRational(binomial(2 * n, 2 * k)) * cache[k];
    }
    cache.push_back(-acc);
  }
  return cache[half];
}

BigRational harmonic(unsigned n) {
  BigRational acc(0);
  for (unsigned j = 1; j <= n; ++j) acc += make_rational(1, j);
  return acc;
}

BigRational alt_power_sum(unsigned m, unsigned long k) {
  const BigRational kk{BigInt(k)};
  const int sign = sign_pow(static_cast<long>(k));
  // (1 + (-1)^k) / 2
  const BigRational even = (k % 2 == 0) ? BigRational(1) : BigRational(0);
  const BigRational half(1, 2);
  switch (m) {
    case 0:
      return even - 1;
    case 1:
      return sign * half * (kk + 1 - even);
    case 2:
      return sign * half * kk * (kk + 1);
    case 3:
      return sign * (half * kk * kk * kk + BigRational(3, 4) * kk * kk) +
             BigRational(1, 4) * (1 - even);
    case 4:
      return sign * (half * kk * kk * kk * kk + kk * kk * kk - half * kk);
    default:
      throw UnsupportedDegree("alternating power sums are available for m <= 4, got m = " +
                              std::to_string(m));
  }
}

}  // namespace hypint
