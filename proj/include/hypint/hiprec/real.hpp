#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "hypint/exact/rational.hpp"

namespace hypint {

struct PrecisionContext {
  unsigned bits = 128;
  unsigned guard_bits = 32;

  PrecisionContext() = default;
  // Throws std::invalid_argument when bits < 64 or guard_bits < 32.
  PrecisionContext(unsigned bits, unsigned guard_bits = 32);

  mpfr_prec_t working() const { return static_cast<mpfr_prec_t>(bits + guard_bits); }
  // Same target with extra internal bits, for callers that expect cancellation.
  PrecisionContext widened(unsigned extra) const { return {bits + extra, guard_bits}; }
  // Agreement threshold 2^-(bits - slack).
  double tolerance(int slack) const;
};

// Finite MPFR number with value semantics. Binary operations run at the larger
// of the operand precisions; any NaN or infinity raises DomainError.
class Real {
 public:
  Real() : Real(0L, 64) {}
  explicit Real(mpfr_prec_t prec);
  Real(long value, mpfr_prec_t prec);
  Real(double value, mpfr_prec_t prec);
  Real(const BigRational& value, mpfr_prec_t prec);
  Real(const BigInt& value, mpfr_prec_t prec);
  // Decimal literal such as "1.288022524698077"; rounding to nearest.
  static Real parse(std::string_view text, mpfr_prec_t prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  // Copy rounded to a different precision.
  Real rounded(mpfr_prec_t prec) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDZ); }
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;
  // Enough significant digits for the precision, minus two.
  std::string to_string() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(long o);
  Real& operator-=(long o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  Real operator-() const;

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator+(long a, Real b) { return b += a; }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator-(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  void check() const;
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
// 1/cosh(x) without overflow for large |x|.
Real sech(const Real& x);
Real pow(const Real& base, const Real& e);
Real pow(const Real& base, long e);
Real ldexp(const Real& x, long e);  // x * 2^e
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real const_pi(mpfr_prec_t prec);
Real const_log2(mpfr_prec_t prec);
Real const_euler(mpfr_prec_t prec);

// |a - b| <= tol * max(1, |b|).
bool close_to(const Real& a, const Real& b, double tol);

}  // namespace hypint
