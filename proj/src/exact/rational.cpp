#include "hypint/exact/rational.hpp"

#include <mutex>
#include <deque>
#include <stdexcept>

namespace hypint {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

const BigInt& factorial(unsigned n) {
  // deque keeps references stable while the cache grows.
  static std::deque<BigInt> cache{BigInt(1)};
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
  }
  return cache[n];
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigRational pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? make_rational(BigInt(1), p) : BigRational(p);
}

BigRational pow_int(const BigRational& base, unsigned e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return make_rational(num, den);
}

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  BigInt num, den(1);
  try {
    if (slash == std::string::npos) {
      if (num.set_str(s, 10) != 0) throw std::invalid_argument(s);
    } else {
      if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0) {
        throw std::invalid_argument(s);
      }
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  return make_rational(num, den);
}

}  // namespace hypint
