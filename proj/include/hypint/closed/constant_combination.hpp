#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypint/exact/rational.hpp"
#include "hypint/hiprec/real.hpp"

namespace hypint {

// Named transcendental constants the integer-T closed forms are built from.
enum class Basis {
  kOne,
  kLog2,
  kLogPi,
  kLogGammaQuarter,  // log Gamma(1/4)
  kBeta2,            // beta(2) / pi
  kBeta4,            // beta(4) / pi^3
  kZeta3,            // zeta(3) / pi^2
  kZeta5,            // zeta(5) / pi^4
  kZetaDotM1,        // zeta'(-1)
  kZetaDotM3,
  kBetaDotM2,        // beta'(-2)
  kBetaDotM4,
};

inline constexpr std::size_t kBasisSize = 12;

std::string_view basis_name(Basis b);
std::optional<Basis> parse_basis(std::string_view name);
Real basis_value(Basis b, const PrecisionContext& ctx);
const std::array<Basis, kBasisSize>& all_basis();

struct LogTerm {
  BigRational coeff;
  BigInt arg;  // >= 1
  bool operator==(const LogTerm&) const = default;
};

// global_sign * (sum_b c_b * b + sum_i c_i log m_i), with exact coefficients.
class ConstantCombination {
 public:
  ConstantCombination() = default;

  const BigRational& coefficient(Basis b) const { return coeffs_[static_cast<std::size_t>(b)]; }
  void set(Basis b, const BigRational& c) { coeffs_[static_cast<std::size_t>(b)] = c; }
  void add(Basis b, const BigRational& c) { coeffs_[static_cast<std::size_t>(b)] += c; }
  // log 1 terms are dropped; equal arguments are merged.
  void add_log(const BigRational& c, const BigInt& m);

  const std::vector<LogTerm>& log_sum() const { return log_sum_; }
  int global_sign() const { return sign_; }
  void set_global_sign(int sign) { sign_ = sign < 0 ? -1 : 1; }

  // Same value with the sign folded into the coefficients.
  ConstantCombination normalized() const;
  ConstantCombination scaled(const BigRational& q) const;
  ConstantCombination& operator+=(const ConstantCombination& o);
  ConstantCombination& operator-=(const ConstantCombination& o);
  friend ConstantCombination operator+(ConstantCombination a, const ConstantCombination& b) {
    return a += b;
  }
  friend ConstantCombination operator-(ConstantCombination a, const ConstantCombination& b) {
    return a -= b;
  }

  bool is_zero() const;
  // Value equality: compares normalized forms.
  friend bool operator==(const ConstantCombination& a, const ConstantCombination& b);

  Real evaluate(const PrecisionContext& ctx) const;

  // {"log2": "3/2", ..., "log_sum": [["c", "m"], ...]} with the sign folded in;
  // zero coefficients are omitted.
  nlohmann::json to_json() const;
  static ConstantCombination from_json(const nlohmann::json& j);
  // Human-readable, e.g. "7·ζ(3)/π²".
  std::string to_text() const;

 private:
  std::array<BigRational, kBasisSize> coeffs_{};
  std::vector<LogTerm> log_sum_;
  int sign_ = 1;
};

}  // namespace hypint
