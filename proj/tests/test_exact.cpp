#include <sstream>
#include <thread>
#include <vector>

#include "doctest.h"
#include "hypint/errors.hpp"
#include "hypint/exact/coeff_table.hpp"
#include "hypint/exact/numbers.hpp"
#include "hypint/exact/rational.hpp"
#include "hypint/exact/tables.hpp"

using namespace hypint;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

// Bernoulli numbers from sum_{k<=n} C(n+1, k) B_k = 0, independent of the library.
std::vector<BigRational> brute_bernoulli(unsigned n) {
  std::vector<BigRational> b{q(1)};
  for (unsigned m = 1; m <= n; ++m) {
    BigRational s = 0;
    for (unsigned k = 0; k < m; ++k) s += BigRational(binomial(m + 1, k)) * b[k];
    b.push_back(-s / (m + 1));
  }
  return b;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(make_rational(6, -4) == q(-3, 2));
  CHECK(to_string(q(-3, 2)) == "-3/2");
  CHECK(to_string(q(5)) == "5");
  CHECK(parse_rational("-14/6") == q(-7, 3));
  CHECK(parse_rational("12") == q(12));
  CHECK_THROWS_AS(parse_rational("1/x"), std::invalid_argument);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(pow2(-3) == q(1, 8));
  CHECK(pow_int(q(-2, 3), 3) == q(-8, 27));
}

TEST_CASE("bernoulli numbers and polynomials") {
  const auto b = brute_bernoulli(30);
  for (unsigned n = 0; n <= 30; ++n) CHECK(bernoulli(n) == b[n]);
  CHECK(bernoulli(1) == q(-1, 2));
  CHECK(bernoulli_poly(3, q(1, 4)) == q(3, 64));
  for (long t = -5; t <= 5; ++t) {
    const BigRational z = q(t, 3);
    CHECK(bernoulli_poly(3, z) == z * z * z - q(3, 2) * z * z + z / 2);
  }
  for (unsigned n = 0; n <= 10; ++n) CHECK(bernoulli_poly(n, 0) == bernoulli(n));
}

TEST_CASE("euler numbers and harmonic numbers") {
  // sech x = 1 - x^2/2 + 5x^4/24 - 61x^6/720 + 1385x^8/40320
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(8) == 1385);
  CHECK(euler_number(5) == 0);
  // sum_{k<=n/2} C(n, 2k) E_{2k} = 0 for even n > 0
  for (unsigned n = 2; n <= 24; n += 2) {
    BigRational s = 0;
    for (unsigned k = 0; k <= n; k += 2) s += BigRational(binomial(n, k)) * euler_number(k);
    CHECK(s == 0);
  }
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(4) == q(25, 12));
}

TEST_CASE("alternating power sums match brute force") {
  CHECK(alt_power_sum(0, 3) == -1);
  CHECK(alt_power_sum(2, 4) == 10);
  CHECK(alt_power_sum(1, 0) == 0);
  for (unsigned m = 0; m <= 4; ++m) {
    BigRational s = 0;
    for (unsigned long k = 0; k <= 200; ++k) {
      if (k > 0) s += BigRational(sign_pow(static_cast<long>(k))) * pow_int(BigRational(k), m);
      CHECK(alt_power_sum(m, k) == s);
    }
  }
  CHECK_THROWS_AS(alt_power_sum(5, 3), UnsupportedDegree);
}

TEST_CASE("g and h tables") {
  const CoeffTable g = g_table(8);
  const CoeffTable h = h_table(8);
  for (int n = 1; n <= 9; ++n) {
    CHECK(g.at(n, 1) == 1);
    CHECK(h.at(n, 1) == 1);
  }
  CHECK(g.at(2, 2) == 1);
  CHECK(g.at(3, 2) == q(10, 9));
  CHECK(h.at(2, 2) == 1);
  CHECK(h.at(3, 2) == q(5, 4));
  // Direct evaluation of the defining sums.
  for (int n = 1; n <= 9; ++n) {
    for (int k = 2; k <= n; ++k) {
      BigRational sg = 0, sh = 0;
      for (int j = k - 1; j <= n - 1; ++j) {
        sg += g.at(j, k - 1) / BigRational((2 * j - 1) * (2 * j - 1));
        sh += h.at(j, k - 1) / BigRational(j * j);
      }
      CHECK(g.at(n, k) == sg);
      CHECK(h.at(n, k) == sh);
    }
  }
  for (const auto& [rc, v] : h.entries()) {
    CHECK(v > 0);
    if (rc.first < h.max_row()) CHECK(v <= h.at(rc.first + 1, rc.second));
  }
  for (const auto& [rc, v] : g.entries()) CHECK(v > 0);
}

TEST_CASE("sech and tanh derivative coefficients") {
  const CoeffTable c = sech_deriv_coeffs(20, CrossCheck::kOn);
  const CoeffTable d = tanh_deriv_coeffs(20, CrossCheck::kOn);
  for (int n = 0; n <= 20; ++n) {
    CHECK(c.at(n, 0) == -1);
    CHECK(c.at(n, n) == BigRational(sign_pow(n + 1) * factorial(2 * n + 1)));
  }
  CHECK(c.at(1, 1) == 6);
  CHECK(c.at(2, 1) == 60);
  CHECK(c.at(2, 2) == -120);
  for (int n = 1; n <= 20; ++n) {
    CHECK(d.at(n, 1) == -pow2(2 * n - 1));
    CHECK(d.at(n, n) == BigRational(sign_pow(n) * factorial(2 * n)));
  }
  CHECK(d.at(1, 1) == -2);
  CHECK(d.at(2, 2) == 24);
  for (const auto& [rc, v] : c.entries()) CHECK(rc.second <= rc.first);
  for (const auto& [rc, v] : d.entries()) CHECK(rc.second <= rc.first);
}

TEST_CASE("normalized matrices are exact inverses") {
  const NormalizedMatrices m = normalized_matrices(20, CrossCheck::kOn);
  const CoeffTable uv = multiply(m.u, m.v, 0, TableKind::kU);
  const CoeffTable vu = multiply(m.v, m.u, 0, TableKind::kU);
  const CoeffTable xy = multiply(m.x, m.y, 1, TableKind::kX);
  for (int r = 0; r <= 20; ++r) {
    for (int s = 0; s <= 20; ++s) {
      const BigRational id = r == s ? 1 : 0;
      CHECK(uv.at(r, s) == id);
      CHECK(vu.at(r, s) == id);
      if (r >= 1 && s >= 1) CHECK(xy.at(r, s) == id);
      if (s > r) {
        CHECK(m.u.at(r, s) == 0);
        CHECK(m.v.at(r, s) == 0);
        CHECK(m.x.at(r, s) == 0);
        CHECK(m.y.at(r, s) == 0);
      }
    }
  }
  CHECK(m.y.at(1, 1) == 1);
  CHECK(m.y.at(2, 1) == q(1, 3));
  CHECK(unit_lower_inverse(m.u, 0, TableKind::kV) == m.v);
  CHECK(unit_lower_inverse(m.x, 1, TableKind::kY) == m.y);
}

TEST_CASE("dN recursion") {
  for (int n = 2; n <= 6; ++n) {
    const CoeffTable t = dN_table(n);
    CHECK(t.at(0, 0) == 1);
    for (int p = 1; p < n; ++p) CHECK(t.at(p, 0) == 0);
  }
  CHECK(dN_table(2).at(1, 2) == 2);
}

TEST_CASE("table export round trip") {
  for (const TableKind kind : {TableKind::kG, TableKind::kH, TableKind::kC, TableKind::kV}) {
    CoeffTable t(kind, 0);
    switch (kind) {
      case TableKind::kG: t = g_table(6); break;
      case TableKind::kH: t = h_table(6); break;
      case TableKind::kC: t = sech_deriv_coeffs(6); break;
      default: t = normalized_matrices(6).v; break;
    }
    const std::string csv = to_csv(t);
    CHECK(csv.rfind("N,k,numerator,denominator\n", 0) == 0);
    CHECK(parse_csv(csv, kind) == t);
  }
  const std::string js = to_json(h_table(2));
  CHECK(js.find("\"num\"") != std::string::npos);
  CHECK(parse_kind("dN") == TableKind::kDN);
  CHECK(!parse_kind("zz"));
}

TEST_CASE("tables are shareable across threads") {
  std::vector<std::thread> pool;
  std::vector<CoeffTable> out(4, CoeffTable(TableKind::kH, 0));
  for (int i = 0; i < 4; ++i) pool.emplace_back([&out, i] { out[static_cast<std::size_t>(i)] = h_table(12); });
  for (auto& t : pool) t.join();
  for (const auto& t : out) CHECK(t == out.front());
}
