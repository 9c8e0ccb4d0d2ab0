#pragma once

#include <cmath>
#include <string>

#include <mpfr.h>

#include "hypint/hiprec/real.hpp"

namespace hypint::test {

inline Real dec(const std::string& text, mpfr_prec_t prec = 256) { return Real::parse(text, prec); }

inline double diff(const Real& a, const Real& b) { return abs(a - b).to_double(); }

// MPFR's own special functions serve as independent oracles.
inline Real mpfr_zeta_at(const Real& s) {
  Real r(s.prec());
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}

inline Real mpfr_lngamma_at(const Real& z) {
  Real r(z.prec());
  mpfr_lngamma(r.raw(), z.raw(), MPFR_RNDN);
  return r;
}

inline Real mpfr_digamma_at(const Real& z) {
  Real r(z.prec());
  mpfr_digamma(r.raw(), z.raw(), MPFR_RNDN);
  return r;
}

inline Real catalan(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_catalan(r.raw(), MPFR_RNDN);
  return r;
}

}  // namespace hypint::test
