#include "hypint/hiprec/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hypint/errors.hpp"

namespace hypint {

PrecisionContext::PrecisionContext(unsigned b, unsigned g) : bits(b), guard_bits(g) {
  if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
  if (guard_bits < 32) throw std::invalid_argument("guard bits must be at least 32");
}

double PrecisionContext::tolerance(int slack) const {
  return std::ldexp(1.0, -(static_cast<int>(bits) - slack));
}

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, value, MPFR_RNDN);
  check();
}

Real::Real(const BigRational& value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const BigInt& value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, mpfr_prec_t prec) {
  Real r(prec);
  std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') throw std::invalid_argument("not a number: " + s);
  r.check();
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rounded(mpfr_prec_t p) const {
  Real r(p);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Real::to_string() const {
  return to_string(std::max(1, static_cast<int>(std::floor(prec() * 0.30103)) - 2));
}

long Real::exponent() const {
  if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(v_);
}

void Real::check() const {
  if (!mpfr_number_p(v_)) throw DomainError("non-finite intermediate value");
}

namespace {

void grow(mpfr_t v, mpfr_prec_t p) {
  if (mpfr_get_prec(v) < p) mpfr_prec_round(v, p, MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  grow(v_, o.prec());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator-=(const Real& o) {
  grow(v_, o.prec());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator*=(const Real& o) {
  grow(v_, o.prec());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  grow(v_, o.prec());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator/=(long o) {
  if (o == 0) throw DomainError("division by zero");
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  check();
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  r.check();
  return r;
}

Real operator/(long a, const Real& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  Real r(b.prec());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  r.check();
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real r(x.prec());
  fn(r.raw(), x.raw(), MPFR_RNDN);
  if (!mpfr_number_p(r.raw())) throw DomainError("non-finite result");
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative number");
  return unary(x, mpfr_sqrt);
}
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log of non-positive number");
  return unary(x, mpfr_log);
}
Real log1p(const Real& x) {
  if (x <= -1L) throw DomainError("log1p argument <= -1");
  return unary(x, mpfr_log1p);
}
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
Real sech(const Real& x) {
  const Real e = exp(-abs(x));
  return ldexp(e, 1) / (1L + e * e);
}

Real pow(const Real& base, const Real& e) {
  Real r(std::max(base.prec(), e.prec()));
  mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
  if (!mpfr_number_p(r.raw())) throw DomainError("non-finite power");
  return r;
}

Real pow(const Real& base, long e) {
  Real r(base.prec());
  mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
  if (!mpfr_number_p(r.raw())) throw DomainError("non-finite power");
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real const_pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real const_log2(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

Real const_euler(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

bool close_to(const Real& a, const Real& b, double tol) {
  Real scale = max(abs(b), Real(1L, b.prec()));
  return abs(a - b) <= scale * Real(tol, 64);
}

}  // namespace hypint
