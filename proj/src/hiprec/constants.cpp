#include "hypint/hiprec/constants.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "hypint/hiprec/gamma.hpp"
#include "hypint/hiprec/zeta.hpp"

namespace hypint {

namespace {

constexpr std::array<std::string_view, 13> kNames{
    "pi",    "gamma", "log2",       "logpi",      "loggamma_quarter", "beta2",     "beta4",
    "zeta3", "zeta5", "zetadot_m1", "zetadot_m3", "betadot_m2",       "betadot_m4"};

Real compute(std::string_view name, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  if (name == "pi") return const_pi(wp);
  if (name == "gamma") return euler_gamma(ctx);
  if (name == "log2") return const_log2(wp);
  if (name == "logpi") return log(const_pi(wp));
  if (name == "loggamma_quarter") return log_gamma(ldexp(Real(1L, wp), -2), ctx);
  if (name == "beta2") return dirichlet_beta(2, ctx);
  if (name == "beta4") return dirichlet_beta(4, ctx);
  if (name == "zeta3") return riemann_zeta(3, ctx);
  if (name == "zeta5") return riemann_zeta(5, ctx);
  if (name == "zetadot_m1") return zeta_sderiv(Real(-1L, wp), ctx);
  if (name == "zetadot_m3") return zeta_sderiv(Real(-3L, wp), ctx);
  if (name == "betadot_m2") return beta_sderiv_neg_even(1, ctx);
  if (name == "betadot_m4") return beta_sderiv_neg_even(2, ctx);
  throw std::invalid_argument("unknown constant: " + std::string(name));
}

}  // namespace

std::span<const std::string_view> constant_names() { return kNames; }

Real named_constant(std::string_view name, const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<std::pair<std::string, mpfr_prec_t>, Real> cache;
  const auto key = std::make_pair(std::string(name), ctx.working());
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Real value = compute(name, ctx);
  std::lock_guard lock(mu);
  cache.emplace(key, value);
  return value;
}

}  // namespace hypint
