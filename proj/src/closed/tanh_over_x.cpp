#include "hypint/closed/tanh_over_x.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hypint/errors.hpp"
#include "hypint/hiprec/gamma.hpp"
#include "hypint/hiprec/zeta.hpp"

namespace hypint {

namespace {

// Coefficient of T^p, as num/den pairs.
using Poly = std::vector<std::array<long, 2>>;

// For each L: polynomials in T multiplying [zeta'(-m, a) - zeta'(-m, b)] for
// m = L..1, then [log Gamma(a) - log Gamma(b)].
struct ContinuousForm {
  long shift;  // a = (T + shift)/4, b = a + 1/2
  std::vector<Poly> zeta_dot;  // index m - 1
  Poly log_gamma;
};

const ContinuousForm& form(int l) {
  static const std::array<ContinuousForm, 4> forms{{
      {1, {{{8, 1}}}, {{0, 1}, {-2, 1}}},
      {2, {{{0, 1}, {-8, 1}}, {{16, 1}}}, {{0, 1}, {0, 1}, {1, 1}}},
      {1,
       {{{4, 3}, {0, 1}, {-4, 1}}, {{0, 1}, {16, 1}}, {{-64, 3}}},
       {{0, 1}, {-1, 3}, {0, 1}, {1, 3}}},
      {2,
       {{{0, 1}, {-8, 3}, {0, 1}, {4, 3}},
        {{16, 3}, {0, 1}, {-8, 1}},
        {{0, 1}, {64, 3}},
        {{-64, 3}}},
       {{0, 1}, {0, 1}, {1, 3}, {0, 1}, {-1, 12}}},
  }};
  return forms[static_cast<std::size_t>(l - 1)];
}

Real eval(const Poly& p, const Real& t) {
  Real v(0L, t.prec());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    v *= t;
    v += Real(make_rational((*it)[0], (*it)[1]), t.prec());
  }
  return v;
}

}  // namespace

Real tanh_over_x_sech_exp(int l, const Real& t, const PrecisionContext& ctx) {
  if (l < 1 || l > 4) {
    throw UnsupportedParameter("no closed form for tanh(x)/x sech^" + std::to_string(l) +
                               ": only L = 1..4 are known, general L remains a conjecture");
  }
  if (t.sign() < 0) throw DomainError("negative T is outside the supported domain");
  const ContinuousForm& f = form(l);
  // The polynomial weights grow like T^L against a result of order 1/T.
  const double tt = t.to_double() + 4.0;
  const PrecisionContext wide =
      ctx.widened(static_cast<unsigned>(std::ceil((l + 2) * std::log2(tt))) + 16);
  const mpfr_prec_t wp = wide.working();
  const Real tw = t.rounded(wp);
  const Real a = ldexp(tw + f.shift, -2);
  const Real b = ldexp(tw + (f.shift + 2), -2);
  Real sum = eval(f.log_gamma, tw) * (log_gamma(a, wide) - log_gamma(b, wide));
  for (std::size_t i = 0; i < f.zeta_dot.size(); ++i) {
    const Real s(-static_cast<long>(i + 1), wp);
    sum += eval(f.zeta_dot[i], tw) * hurwitz_difference(s, a, b, wide).deriv;
  }
  return sum.rounded(ctx.working());
}

}  // namespace hypint
