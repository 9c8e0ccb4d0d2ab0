#include "hypint/identity/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "hypint/closed/integral_spec.hpp"
#include "hypint/closed/recurrence.hpp"
#include "hypint/closed/residuals.hpp"
#include "hypint/closed/sech_integrals.hpp"
#include "hypint/closed/tanh_over_x.hpp"
#include "hypint/errors.hpp"
#include "hypint/identity/functional.hpp"
#include "hypint/identity/misc_identities.hpp"
#include "hypint/identity/ramanujan.hpp"
#include "hypint/oracle/quadrature.hpp"

namespace hypint {

namespace {

using Cases = std::vector<IdentityCase>;

struct Job {
  std::string suite;
  std::function<Cases()> run;
};

struct Plan {
  std::vector<Job> jobs;
  nlohmann::json ranges = nlohmann::json::object();
};

// Platform-independent draws: parameters land on a 1e-6 grid so the report
// prints them exactly.
class Draws {
 public:
  Draws(std::uint64_t seed, std::string_view suite) : rng_(seed ^ fnv1a(suite)) {}

  Real real(double lo, double hi, mpfr_prec_t prec) {
    const long a = std::lround(lo * 1e6);
    const long span = std::lround((hi - lo) * 1e6);
    const long micro = a + static_cast<long>((rng_() >> 11) % static_cast<std::uint64_t>(span + 1));
    return Real(make_rational(micro, 1000000), prec);
  }

  int integer(int lo, int hi) {
    return lo + static_cast<int>((rng_() >> 11) % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

  std::mt19937_64 rng_;
};

template <typename F>
IdentityCase guarded(const std::string& id, const nlohmann::json& params, const PrecisionContext& ctx, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return failed_case(id, params, e.what(), ctx);
  }
}

IdentityCase residual_case(const std::string& id, const nlohmann::json& params, const Residual& r,
                           const PrecisionContext& ctx, const TolerancePolicy& policy) {
  return make_case(id, params, r.lhs, r.rhs, r.oracle_error, ctx, policy);
}

IdentityCase oracle_case(const std::string& id, const nlohmann::json& params, const Real& closed,
                         const IntegralSpec& spec, const PrecisionContext& ctx, const TolerancePolicy& policy) {
  const QuadratureResult q = spec.integrate(ctx);
  return make_case(id, params, closed, q.value, q.est_error, ctx, policy);
}

// Builders take the context and policy by value so jobs own them.

void plan_part_int(Plan& p, const PrecisionContext& ctx, const SuiteOptions& o) {
  Draws d(o.seed, "part_int");
  p.ranges["part_int"] = {{"N", {0, 3}}, {"K", {0, 2}}, {"L", {0.5, 5}}, {"T", {0, 6}}};
  for (int i = 0; i < o.trials; ++i) {
    const int n = d.integer(0, 3);
    const int k = d.integer(0, 2);
    const Real l = d.real(0.5, 5, ctx.working());
    const Real t = d.real(0, 6, ctx.working());
    p.jobs.push_back({"part_int", [=, policy = o.policy] {
                        const nlohmann::json params = {
                            {"N", n}, {"K", k}, {"L", param_value(l)}, {"T", param_value(t)}};
                        return Cases{guarded("part_int_general", params, ctx, [&] {
                          return residual_case("part_int_general", params,
                                               partial_integration_residual(IntegralSpec(n, k, l, t), ctx), ctx,
                                               policy);
                        })};
                      }});
  }
}

void plan_recurrence2(Plan& p, const PrecisionContext& ctx, const SuiteOptions& o) {
  Draws d(o.seed, "recurrence2");
  p.ranges["recurrence2"] = {{"L", {0.5, 5}}, {"T", {0, 6}}};
  for (int i = 0; i < o.trials; ++i) {
    const Real l = d.real(0.5, 5, ctx.working());
    const Real t = d.real(0, 6, ctx.working());
    p.jobs.push_back({"recurrence2", [=, policy = o.policy] {
                        const nlohmann::json params = {{"L", param_value(l)}, {"T", param_value(t)}};
                        return Cases{guarded("two_step_recurrence", params, ctx, [&] {
                          return residual_case("two_step_recurrence", params,
                                               two_step_recurrence_residual(l, t, ctx), ctx, policy);
                        })};
                      }});
  }
}

IdentityCase exact_match(const std::string& id, const nlohmann::json& params, const ConstantCombination& a,
                         const ConstantCombination& b, const PrecisionContext& ctx) {
  if (!(a == b)) {
    return failed_case(id, params, "combinations differ: " + a.to_text() + " vs " + b.to_text(), ctx);
  }
  const Real v = a.evaluate(ctx);
  return make_case_with_tolerance(id, params, v, v, Real(0L, ctx.working()), Real(0L, ctx.working()));
}

void plan_closed_forms(Plan& p, const PrecisionContext& ctx, const SuiteOptions& o) {
  const std::string suite = "closed_forms_T";
  const mpfr_prec_t wp = ctx.working();
  const TolerancePolicy policy = o.policy;
  Draws d(o.seed, suite);
  p.ranges[suite] = {{"L", {1, 4}}, {"T", {0, 6}}};
  auto add = [&](std::function<Cases()> f) { p.jobs.push_back({suite, std::move(f)}); };

  for (int l = 1; l <= 4; ++l) {
    for (long t = 0; t <= 12; ++t) {
      add([=] {
        const nlohmann::json params = {{"L", l}, {"T", t}};
        const Real tr(t, wp);
        Cases out;
        out.push_back(guarded("integer_t_symbolic", params, ctx, [&] {
          return make_case("integer_t_symbolic", params, tanh_over_x_sech_exp_symbolic(l, t).evaluate(ctx),
                           tanh_over_x_sech_exp(l, tr, ctx), Real(0L, wp), ctx, policy);
        }));
        out.push_back(guarded("integer_t_oracle", params, ctx, [&] {
          return oracle_case("integer_t_oracle", params, tanh_over_x_sech_exp(l, tr, ctx),
                             IntegralSpec(1, 0, Real(static_cast<long>(l), wp), tr), ctx, policy);
        }));
        return out;
      });
    }
  }
  for (int i = 0; i < o.trials; ++i) {
    const int l = d.integer(1, 4);
    const Real t = d.real(0, 6, wp);
    add([=] {
      const nlohmann::json params = {{"L", l}, {"T", param_value(t)}};
      return Cases{guarded("continuous_t_oracle", params, ctx, [&] {
        return oracle_case("continuous_t_oracle", params, tanh_over_x_sech_exp(l, t, ctx),
                           IntegralSpec(1, 0, Real(static_cast<long>(l), wp), t), ctx, policy);
      })};
    });
  }
  for (int l = 1; l <= 6; ++l) {
    for (double tv : {0.0, 0.5, 1.0, 2.5, 5.0}) {
      add([=] {
        const Real t(tv, wp);
        const Real lr(static_cast<long>(l), wp);
        const nlohmann::json params = {{"L", l}, {"T", param_value(t)}};
        Cases out;
        out.push_back(guarded("sech_power_exp", params, ctx, [&] {
          return oracle_case("sech_power_exp", params, sech_power_exp(l, t, ctx), IntegralSpec(0, 0, lr, t), ctx,
                             policy);
        }));
        out.push_back(guarded("tanh_sech_power_exp", params, ctx, [&] {
          return oracle_case("tanh_sech_power_exp", params, tanh_sech_power_exp(l, t, ctx),
                             IntegralSpec(0, 1, lr, t), ctx, policy);
        }));
        return out;
      });
    }
  }
  for (auto [lv, tv] : {std::pair{0.5, 0.7}, {1.5, 2.3}, {2.5, 1.1}, {3.7, 4.2}}) {
    add([=] {
      const Real l(lv, wp);
      const Real t(tv, wp);
      const nlohmann::json params = {{"L", param_value(l)}, {"T", param_value(t)}};
      return Cases{guarded("sub_step_sech_squ", params, ctx, [&] {
        const QuadratureResult a = IntegralSpec(0, 0, l + 2, t).integrate(ctx);
        const QuadratureResult b = IntegralSpec(0, 0, l, t).integrate(ctx);
        const QuadratureResult c = IntegralSpec(0, 1, l, t).integrate(ctx);
        const Real lhs = (l + 1) * a.value - l * b.value;
        const Real err = (l + 1) * a.est_error + l * b.est_error + t * c.est_error;
        return make_case("sub_step_sech_squ", params, lhs, t * c.value, err, ctx, policy);
      })};
    });
  }
  for (int n = 0; n <= 5; ++n) {
    add([=] {
      const nlohmann::json params = {{"N", n}};
      return Cases{guarded("beta_recurrence", params, ctx, [&] {
        return oracle_case("beta_recurrence", params, beta_recurrence_eval(n, ctx),
                           IntegralSpec(1, 0, Real(2L * n + 1, wp), Real(0L, wp)), ctx, policy);
      })};
    });
  }
  for (int n = 1; n <= 6; ++n) {
    add([=] {
      const nlohmann::json params = {{"N", n}};
      return Cases{guarded("zeta_recurrence", params, ctx, [&] {
        return oracle_case("zeta_recurrence", params, zeta_recurrence_eval(n, ctx),
                           IntegralSpec(1, 0, Real(2L * n, wp), Real(0L, wp)), ctx, policy);
      })};
    });
  }
  for (int n = 2; n <= 7; ++n) {
    add([=] {
      const nlohmann::json params = {{"N", n}};
      return Cases{guarded("tanh_over_x_power", params, ctx, [&] {
        return oracle_case("tanh_over_x_power", params, tanh_over_x_power(n, ctx).value,
                           IntegralSpec(n, 0, Real(0L, wp), Real(0L, wp)), ctx, policy);
      })};
    });
  }
  add([=] {
    Cases out;
    for (int n = 0; n <= 1; ++n) {
      const nlohmann::json params = {{"N", n}, {"L", 2 * n + 1}};
      out.push_back(guarded("recurrence_symbolic", params, ctx, [&] {
        return exact_match("recurrence_symbolic", params, beta_recurrence_combination(n),
                           tanh_over_x_sech_exp_symbolic(2 * n + 1, 0), ctx);
      }));
    }
    for (int n = 1; n <= 2; ++n) {
      const nlohmann::json params = {{"N", n}, {"L", 2 * n}};
      out.push_back(guarded("recurrence_symbolic", params, ctx, [&] {
        return exact_match("recurrence_symbolic", params, zeta_recurrence_combination(n),
                           tanh_over_x_sech_exp_symbolic(2 * n, 0), ctx);
      }));
    }
    return out;
  });
  for (int l = 1; l <= 4; ++l) {
    for (double tv : {0.5, 1.5, 2.5}) {
      add([=] {
        const Real t(tv, wp);
        const nlohmann::json params = {{"L", l}, {"T", param_value(t)}};
        return Cases{guarded("split_lemma", params, ctx, [&] {
          const QuadratureResult inner = integrate_interval(
              [&](const Real& s) { return tanh_sech_power_exp(l, s, ctx); }, Real(0L, wp), t, ctx);
          const Real rhs = tanh_over_x_sech_exp(l, Real(0L, wp), ctx) - inner.value;
          return make_case("split_lemma", params, tanh_over_x_sech_exp(l, t, ctx), rhs, inner.est_error, ctx,
                           policy);
        })};
      });
    }
  }
}

void plan_functional(Plan& p, const PrecisionContext& ctx, const SuiteOptions& o) {
  const mpfr_prec_t wp = ctx.working();
  Draws d(o.seed, "functional");
  p.ranges["functional"] = {{"id", {1, 8}}, {"s", {0.5, 4}}};
  auto add = [&](int id, const Real& s) {
    p.jobs.push_back(
        {"functional", [=, policy = o.policy] { return Cases{verify_functional_equation(id, s, ctx, policy)}; }});
  };
  for (int id = 1; id <= 8; ++id) add(id, Real(2L, wp));
  add(1, Real(make_rational(3, 2), wp));
  add(8, Real(1L, wp));
  for (int i = 0; i < o.trials; ++i) {
    const int id = d.integer(1, 8);
    add(id, d.real(0.5, 4, wp));
  }
}

void plan_ramanujan(Plan& p, const PrecisionContext& ctx, const SuiteOptions& o) {
  const mpfr_prec_t wp = ctx.working();
  Draws d(o.seed, "ramanujan");
  p.ranges["ramanujan"] = {{"alpha", {0.3, 3}}, {"N", {1, 4}}, {"N_sech", {0, 4}}};
  auto add = [&](RamanujanKind k, const Real& a, int n) {
    p.jobs.push_back(
        {"ramanujan", [=, policy = o.policy] { return Cases{verify_ramanujan(k, a, n, ctx, policy)}; }});
  };
  const RamanujanKind kinds[] = {RamanujanKind::kCoth, RamanujanKind::kSech, RamanujanKind::kCsch,
                                 RamanujanKind::kTanh};
  add(RamanujanKind::kCoth, Real(1L, wp), 1);
  add(RamanujanKind::kSech, Real(1L, wp), 0);
  add(RamanujanKind::kTanh, Real(2L, wp), 2);
  for (RamanujanKind k : kinds) add(k, Real(make_rational(-7, 10), wp), 1);
  for (int i = 0; i < o.trials; ++i) {
    const RamanujanKind k = kinds[i % 4];
    const Real a = d.real(0.3, 3, wp);
    add(k, a, d.integer(k == RamanujanKind::kSech ? 0 : 1, 4));
  }
}

void plan_limit(Plan& p, const PrecisionContext& ctx, const SuiteOptions& o) {
  const mpfr_prec_t wp = ctx.working();
  p.ranges["limit"] = {{"N", {1, 2}}, {"alpha", {0.4, 0.1, 0.05, 0.025}}};
  for (int n = 1; n <= 2; ++n) {
    p.jobs.push_back({"limit", [=, policy = o.policy] {
                        std::vector<Real> alphas;
                        for (long den : {5L, 20L, 40L, 80L}) alphas.emplace_back(make_rational(2, den), wp);
                        return verify_limit_equation(n, alphas, ctx, policy);
                      }});
  }
}

void plan_polygamma(Plan& p, const PrecisionContext& ctx, const SuiteOptions& o) {
  p.ranges["polygamma"] = {{"n", {1, 4}}};
  for (int n = 1; n <= 4; ++n) {
    p.jobs.push_back(
        {"polygamma", [=, policy = o.policy] { return verify_polygamma_quarter(n, ctx, policy); }});
  }
}

void plan_loglog(Plan& p, const PrecisionContext& ctx, const SuiteOptions& o) {
  const mpfr_prec_t wp = ctx.working();
  Draws d(o.seed, "loglog");
  p.ranges["loglog"] = {{"N", {1, 3}}, {"L", {0.5, 5}}};
  const TolerancePolicy policy = o.policy;
  for (int n = 1; n <= 3; ++n) {
    p.jobs.push_back({"loglog", [=] { return Cases{verify_loglog_beta(n, ctx, policy)}; }});
    p.jobs.push_back({"loglog", [=] { return Cases{verify_loglog_zeta(n, ctx, policy)}; }});
  }
  p.jobs.push_back({"loglog", [=] { return verify_blagouchine(ctx, policy); }});
  for (long l = 1; l <= 4; ++l) {
    p.jobs.push_back({"loglog", [=] { return Cases{verify_loglog_tanh_sech(Real(l, wp), ctx, policy)}; }});
  }
  for (int i = 0; i < o.trials; ++i) {
    const Real l = d.real(0.5, 5, wp);
    p.jobs.push_back({"loglog", [=] { return Cases{verify_loglog_tanh_sech(l, ctx, policy)}; }});
  }
}

void plan_products(Plan& p, const PrecisionContext& ctx, const SuiteOptions& o) {
  const mpfr_prec_t wp = ctx.working();
  Draws d(o.seed, "products");
  p.ranges["products"] = {{"s", {0.5, 4}}, {"b", {0.5, 4}}, {"terms", 10000}};
  const TolerancePolicy policy = o.policy;
  p.jobs.push_back({"products", [=] { return verify_products(10000, 1e-3, ctx, policy); }});
  for (int i = 0; i < o.trials; ++i) {
    const Real s = d.real(0.5, 4, wp);
    const Real b = d.real(0.5, 4, wp);
    p.jobs.push_back({"products", [=] { return Cases{verify_two_variable(s, b, ctx, policy)}; }});
  }
}

void plan_hurwitz(Plan& p, const PrecisionContext& ctx, const SuiteOptions& o) {
  const mpfr_prec_t wp = ctx.working();
  Draws d(o.seed, "hurwitz");
  p.ranges["hurwitz"] = {{"s", {0.5, 4}}, {"k", {0, 5}}};
  const TolerancePolicy policy = o.policy;
  for (int i = 0; i < o.trials; ++i) {
    const Real s = d.real(0.5, 4, wp);
    const int k = d.integer(0, 5);
    p.jobs.push_back({"hurwitz", [=] {
                        return Cases{verify_hurwitz_zeta(s, k, ctx, policy), verify_hurwitz_beta(s, k, ctx, policy)};
                      }});
  }
}

using Planner = void (*)(Plan&, const PrecisionContext&, const SuiteOptions&);

const std::vector<std::pair<std::string, Planner>>& registry() {
  static const std::vector<std::pair<std::string, Planner>> r = {
      {"part_int", plan_part_int},       {"recurrence2", plan_recurrence2}, {"closed_forms_T", plan_closed_forms},
      {"functional", plan_functional},   {"ramanujan", plan_ramanujan},     {"limit", plan_limit},
      {"polygamma", plan_polygamma},     {"loglog", plan_loglog},           {"products", plan_products},
      {"hurwitz", plan_hurwitz},
  };
  return r;
}

std::vector<Cases> run_jobs(const std::vector<Job>& jobs, const PrecisionContext& ctx, unsigned threads) {
  std::vector<Cases> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i].run();
      } catch (const std::exception& e) {
        results[i] = {failed_case("job_error", nlohmann::json::object(), e.what(), ctx)};
      }
      for (IdentityCase& c : results[i]) c.suite = jobs[i].suite;
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads ? threads : std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : registry()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const PrecisionContext& ctx, const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(name);
  report.precision_bits = ctx.bits;
  report.seed = opts.seed;
  report.trials = opts.trials;

  Plan plan;
  bool found = false;
  for (const auto& [suite, planner] : registry()) {
    if (name == "all" || name == suite) {
      planner(plan, ctx, opts);
      report.subsuites.push_back(suite);
      found = true;
    }
  }
  if (!found) throw UnknownSuite("unknown suite: " + std::string(name));
  report.ranges = plan.ranges;

  for (Cases& cs : run_jobs(plan.jobs, ctx, opts.threads)) {
    for (IdentityCase& c : cs) report.cases.push_back(std::move(c));
  }
  sort_cases(report.cases);
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hypint
