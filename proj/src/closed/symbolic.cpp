#include <string>
#include <utility>
#include <vector>

#include "hypint/closed/tanh_over_x.hpp"
#include "hypint/errors.hpp"

namespace hypint {

namespace {

struct Frac {
  long num;
  long den = 1;
};

// Increasing powers of the variable.
using Poly = std::vector<Frac>;

// Closed form at T = 2k or T = 2k + 1:
//   (-1)^k [ sum_b P_b(k) b + sum_j (-1)^j Q(j - k) log(arg_j) ]
// where j runs over 0..k-1 with arg 2j + 1 (odd_args) or 1..k with arg j.
struct IntegerForm {
  std::vector<std::pair<Basis, Poly>> terms;
  Poly log_poly;
  bool odd_args;
};

using B = Basis;

// Indexed by 2 (L - 1) + parity of T.
const std::vector<IntegerForm>& forms() {
  static const std::vector<IntegerForm> f{
      // L = 1, T = 2k
      {{{B::kLog2, {{0}, {6}}},
        {B::kLogPi, {{0}, {4}}},
        {B::kLogGammaQuarter, {{0}, {-8}}},
        {B::kBeta2, {{4}}}},
       {{2}, {4}},
       true},
      // L = 1, T = 2k + 1
      {{{B::kLog2, {{-1, 3}, {2}}}, {B::kLogPi, {{-1}, {-2}}}, {B::kZetaDotM1, {{-12}}}},
       {{2}, {-4}},
       false},
      // L = 2, T = 2k
      {{{B::kLog2, {{0}, {8, 3}, {-2}}},
        {B::kLogPi, {{0}, {0}, {2}}},
        {B::kZetaDotM1, {{0}, {24}}},
        {B::kZeta3, {{7}}}},
       {{0}, {0}, {-4}},
       false},
      // L = 2, T = 2k + 1
      {{{B::kLog2, {{3, 2}, {6}, {6}}},
        {B::kLogPi, {{1}, {4}, {4}}},
        {B::kLogGammaQuarter, {{-2}, {-8}, {-8}}},
        {B::kBeta2, {{4}, {8}}},
        {B::kBetaDotM2, {{-1}}}},
       {{0}, {0}, {-4}},
       true},
      // L = 3, T = 2k
      {{{B::kLog2, {{0}, {1}, {0}, {-4}}},
        {B::kLogPi, {{0}, {2, 3}, {0}, {-8, 3}}},
        {B::kLogGammaQuarter, {{0}, {-4, 3}, {0}, {16, 3}}},
        {B::kBeta2, {{2, 3}, {0}, {-8}}},
        {B::kBetaDotM2, {{0}, {2}}},
        {B::kBeta4, {{16}}}},
       {{0}, {-4, 3}, {-4}, {-8, 3}},
       true},
      // L = 3, T = 2k + 1
      {{{B::kLog2, {{4, 45}, {2}, {2, 3}, {-4, 3}}},
        {B::kLogPi, {{0}, {2, 3}, {2}, {4, 3}}},
        {B::kZetaDotM1, {{4}, {24}, {24}}},
        {B::kZeta3, {{7}, {14}}},
        {B::kZetaDotM3, {{40}}}},
       {{0}, {4, 3}, {-4}, {8, 3}},
       false},
      // L = 4, T = 2k
      {{{B::kLog2, {{0}, {8, 5}, {-2, 3}, {-16, 9}, {2, 3}}},
        {B::kLogPi, {{0}, {0}, {2, 3}, {0}, {-2, 3}}},
        {B::kZetaDotM1, {{0}, {8}, {0}, {-16}}},
        {B::kZeta3, {{7, 3}, {0}, {-14}}},
        {B::kZetaDotM3, {{0}, {-80}}},
        {B::kZeta5, {{31}}}},
       {{0}, {0}, {-4, 3}, {0}, {4, 3}},
       false},
      // L = 4, T = 2k + 1
      {{{B::kLog2, {{3, 8}, {1}, {-1}, {-4}, {-2}}},
        {B::kLogPi, {{1, 4}, {2, 3}, {-2, 3}, {-8, 3}, {-4, 3}}},
        {B::kLogGammaQuarter, {{-1, 2}, {-4, 3}, {4, 3}, {16, 3}, {8, 3}}},
        {B::kBeta2, {{2, 3}, {-4, 3}, {-8}, {-16, 3}}},
        {B::kBetaDotM2, {{1, 6}, {2}, {2}}},
        {B::kBeta4, {{16}, {32}}},
        {B::kBetaDotM4, {{1, 12}}}},
       {{0}, {0}, {-4, 3}, {0}, {4, 3}},
       true},
  };
  return f;
}

std::vector<BigRational> exact(const Poly& p) {
  std::vector<BigRational> out;
  for (const Frac& f : p) out.push_back(make_rational(f.num, f.den));
  return out;
}

BigRational eval(const std::vector<BigRational>& p, const BigRational& x) {
  BigRational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

void check_l(int l) {
  if (l < 1 || l > 4) {
    throw UnsupportedParameter("no closed form for tanh(x)/x sech^" + std::to_string(l) +
                               ": only L = 1..4 are known, general L remains a conjecture");
  }
}

}  // namespace

IntegerTForm integer_t_form(int l, int parity) {
  check_l(l);
  const IntegerForm& f = forms()[static_cast<std::size_t>(2 * (l - 1) + (parity & 1))];
  IntegerTForm out;
  for (const auto& [basis, poly] : f.terms) out.terms.emplace_back(basis, exact(poly));
  out.log_poly = exact(f.log_poly);
  out.odd_args = f.odd_args;
  return out;
}

ConstantCombination tanh_over_x_sech_exp_symbolic(int l, long t) {
  check_l(l);
  if (t < 0) throw DomainError("negative T is outside the supported domain");
  const IntegerTForm f = integer_t_form(l, static_cast<int>(t % 2));
  const long k = t / 2;
  const BigRational kq(k);
  ConstantCombination c;
  for (const auto& [basis, poly] : f.terms) c.add(basis, eval(poly, kq));
  const long lo = f.odd_args ? 0 : 1;
  const long hi = f.odd_args ? k - 1 : k;
  for (long j = lo; j <= hi; ++j) {
    const BigRational q = sign_pow(j) * eval(f.log_poly, BigRational(j - k));
    c.add_log(q, BigInt(f.odd_args ? 2 * j + 1 : j));
  }
  c.set_global_sign(sign_pow(k));
  return c;
}

}  // namespace hypint
