// hypint: evaluate the integrals, dump coefficient tables and constants, run
// the identity suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypint/closed/recurrence.hpp"
#include "hypint/closed/tanh_over_x.hpp"
#include "hypint/errors.hpp"
#include "hypint/exact/tables.hpp"
#include "hypint/hiprec/constants.hpp"
#include "hypint/hiprec/products.hpp"
#include "hypint/identity/suite.hpp"

namespace {

using hypint::BigRational;
using hypint::PrecisionContext;
using hypint::Real;
using json = nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

unsigned default_bits() {
  if (const char* env = std::getenv("HYPINT_BITS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v >= 64) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring HYPINT_BITS=" << env << " (need an integer >= 64)\n";
  }
  return 128;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string superscript(long n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  if (n < 10) return digits[n];
  return superscript(n / 10) + digits[n % 10];
}

// "c1·f(a1)/π^e1 + c2·..." from coefficients of (name(a_k), pi^{e_k}).
std::string series_text(const std::vector<BigRational>& coeffs, const char* fn, int arg0, int arg_step, int pow0) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const BigRational& c = coeffs[i];
    if (c == 0) continue;
    const long arg = arg0 + arg_step * static_cast<long>(i);
    const long pw = pow0 + 2 * static_cast<long>(i);
    const BigRational mag = abs(c);
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += hypint::to_string(mag) + "·";
    out += std::string(fn) + "(" + std::to_string(arg) + ")";
    if (pw == 1) out += "/π";
    if (pw > 1) out += "/π" + superscript(pw);
  }
  return out.empty() ? "0" : out;
}

// Exact rational when the text is "p" or "p/q", otherwise a decimal literal.
struct Param {
  Real value;
  std::optional<BigRational> exact;
};

Param parse_param(const std::string& text, mpfr_prec_t prec) {
  try {
    const BigRational q = hypint::parse_rational(text);
    return {Real(q, prec), q};
  } catch (const std::invalid_argument&) {
  }
  try {
    return {Real::parse(text, prec), std::nullopt};
  } catch (const std::exception&) {
    throw UsageError("not a number: " + text);
  }
}

void emit(const std::string& format, const json& j, const std::string& text) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

struct EvalArgs {
  std::optional<int> l;
  std::optional<int> n;
  std::string t = "0";
  std::string recurrence;
  bool symbolic = false;
  bool power = false;
  unsigned bits = 128;
  std::string format = "text";
};

int cmd_eval(const EvalArgs& a) {
  const PrecisionContext ctx(a.bits);
  const mpfr_prec_t wp = ctx.working();
  json j;
  std::string text;

  if (a.power || !a.recurrence.empty()) {
    if (!a.n) throw UsageError("--N is required");
    if (a.l) throw UsageError("--L cannot be combined with --power or --recurrence");
    const int n = *a.n;
    std::vector<BigRational> coeffs;
    Real value(wp);
    std::string combination;
    if (a.power) {
      if (n < 2) throw hypint::UnsupportedParameter("--power needs N >= 2");
      const hypint::PowerIntegral p = hypint::tanh_over_x_power(n, ctx);
      coeffs = p.coefficients;
      value = p.value;
      combination = series_text(coeffs, "ζ", 3, 2, 2);
      j["mode"] = "power";
    } else if (a.recurrence == "beta") {
      coeffs = hypint::beta_recurrence_coefficients(n);
      value = hypint::beta_recurrence_eval(n, ctx);
      combination = series_text(coeffs, "β", 2, 2, 1);
      j["mode"] = "beta_recurrence";
    } else if (a.recurrence == "zeta") {
      coeffs = hypint::zeta_recurrence_coefficients(n);
      value = hypint::zeta_recurrence_eval(n, ctx);
      combination = series_text(coeffs, "ζ", 3, 2, 2);
      j["mode"] = "zeta_recurrence";
    } else {
      throw UsageError("--recurrence must be beta or zeta");
    }
    j["N"] = n;
    j["coefficients"] = json::array();
    for (const auto& c : coeffs) j["coefficients"].push_back(hypint::to_string(c));
    j["combination"] = combination;
    j["value"] = hypint::format_value(value, ctx.bits);
    text = combination + " = " + hypint::format_value(value, ctx.bits);
    emit(a.format, j, text);
    return 0;
  }

  if (!a.l) throw UsageError("--L or --power/--recurrence with --N is required");
  const int l = *a.l;
  const Param t = parse_param(a.t, wp);
  const bool integer_t = t.exact && t.exact->get_den() == 1 && *t.exact >= 0;
  if (a.symbolic && !integer_t) throw UsageError("--symbolic needs a nonnegative integer --T");
  j["mode"] = a.symbolic ? "symbolic" : "continuous";
  j["L"] = l;
  j["T"] = a.t;

  std::optional<hypint::ConstantCombination> combination;
  if (integer_t && (a.symbolic || (l >= 1 && l <= 4))) {
    combination = hypint::tanh_over_x_sech_exp_symbolic(l, t.exact->get_num().get_si());
  }
  const Real value = combination && a.symbolic ? combination->evaluate(ctx)
                                               : hypint::tanh_over_x_sech_exp(l, t.value, ctx);
  j["value"] = hypint::format_value(value, ctx.bits);
  if (combination) {
    j["combination"] = combination->to_json();
    j["text"] = combination->to_text();
    text = combination->to_text() + " = ";
  }
  text += hypint::format_value(value, ctx.bits);
  emit(a.format, j, text);
  return 0;
}

int cmd_table(const std::string& kind_name, int n, const std::string& format) {
  const auto kind = hypint::parse_kind(kind_name);
  if (!kind) throw UsageError("unknown table kind: " + kind_name);
  if (n < 1) throw UsageError("--n must be >= 1");
  using hypint::TableKind;
  auto build = [&]() -> hypint::CoeffTable {
    switch (*kind) {
      case TableKind::kG: return hypint::g_table(n);
      case TableKind::kH: return hypint::h_table(n);
      case TableKind::kC: return hypint::sech_deriv_coeffs(n);
      case TableKind::kD: return hypint::tanh_deriv_coeffs(n);
      case TableKind::kU: return hypint::normalized_matrices(n).u;
      case TableKind::kV: return hypint::normalized_matrices(n).v;
      case TableKind::kX: return hypint::normalized_matrices(n).x;
      case TableKind::kY: return hypint::normalized_matrices(n).y;
      case TableKind::kDN:
        if (n < 2) throw UsageError("--kind dN needs --n >= 2");
        return hypint::dN_table(n);
    }
    throw UsageError("unknown table kind");
  };
  const hypint::CoeffTable table = build();
  std::cout << (format == "json" ? hypint::to_json(table) : hypint::to_csv(table));
  if (format == "json") std::cout << "\n";
  return 0;
}

int cmd_constants(unsigned bits, const std::string& format) {
  const PrecisionContext ctx(bits);
  json j = json::object();
  std::string text;
  for (std::string_view name : hypint::constant_names()) {
    const std::string v = hypint::format_value(hypint::named_constant(name, ctx), bits);
    j[std::string(name)] = v;
    text += std::string(name) + " = " + v + "\n";
  }
  text.pop_back();
  emit(format, j, text);
  return 0;
}

int cmd_products(const std::string& s_text, long terms, unsigned bits, const std::string& format) {
  const PrecisionContext ctx(bits);
  const Param s = parse_param(s_text, ctx.working());
  if (s.value.sign() <= 0) throw UsageError("--s must be positive");
  if (terms < 1) throw UsageError("--terms must be >= 1");
  const Real partial = hypint::f_product_partial(s.value, terms, ctx);
  const Real closed = hypint::f_closed(s.value, ctx);
  const Real gap = abs(partial - closed);
  const json j = {{"s", s_text},
                  {"terms", terms},
                  {"partial", hypint::format_value(partial, bits)},
                  {"closed", hypint::format_value(closed, bits)},
                  {"gap", hypint::format_error(gap)}};
  emit(format, j,
       "partial = " + hypint::format_value(partial, bits) + "\nclosed  = " + hypint::format_value(closed, bits) +
           "\ngap     = " + hypint::format_error(gap));
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  int trials = 25;
  std::uint64_t seed = 42;
  unsigned bits = 128;
  std::string out;
  std::optional<double> tolerance;
  unsigned threads = 0;
  bool no_wall_time = false;
};

int cmd_verify(const VerifyArgs& a) {
  const PrecisionContext ctx(a.bits);
  hypint::SuiteOptions opts;
  opts.trials = a.trials;
  opts.seed = a.seed;
  opts.threads = a.threads;
  opts.policy.floor = a.tolerance;
  const hypint::SuiteReport report = hypint::run_suite(a.suite, ctx, opts);
  const std::string body = report.to_json(!a.no_wall_time).dump(2) + "\n";
  if (a.out.empty() || a.out == "-") {
    std::cout << body;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + a.out);
    f << body;
  }
  for (const auto& c : report.cases) {
    if (c.status != hypint::CaseStatus::kFail) continue;
    std::cerr << "FAIL " << c.suite << "/" << c.id << " " << c.params.dump() << " abs_err=" << hypint::format_error(c.abs_err)
              << " tol=" << hypint::format_error(c.tolerance) << (c.note.empty() ? "" : " " + c.note) << "\n";
  }
  std::cerr << report.suite << ": " << report.count(hypint::CaseStatus::kPass) << " pass, "
            << report.count(hypint::CaseStatus::kFail) << " fail, " << report.count(hypint::CaseStatus::kSkipped)
            << " skipped\n";
  return report.all_passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypint: integrals of tanh(x)/x sech(x)^L exp(-Tx) and related identities"};
  app.require_subcommand(1);
  const unsigned bits0 = default_bits();
  const auto bits_check = CLI::Range(64u, 1u << 20);
  const auto formats = CLI::IsMember({"text", "json"});

  EvalArgs eval;
  eval.bits = bits0;
  auto add_eval_options = [&](CLI::App* sub) {
    sub->add_option("--L", eval.l, "sech power L");
    sub->add_option("--N", eval.n, "N for --power or --recurrence");
    sub->add_option("--T", eval.t, "exponential rate T >= 0 (integer, p/q or decimal)");
    sub->add_option("--recurrence", eval.recurrence, "beta: tanh/x sech^(2N+1); zeta: tanh/x sech^(2N)")
        ->check(CLI::IsMember({"beta", "zeta"}));
    sub->add_flag("--power", eval.power, "integral of (tanh x / x)^N");
    sub->add_option("--bits", eval.bits, "precision in bits")->check(bits_check);
    sub->add_option("--format", eval.format)->check(formats);
  };
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an integral");
  add_eval_options(eval_cmd);
  eval_cmd->add_flag("--symbolic", eval.symbolic, "exact combination at integer T");
  CLI::App* symbolic_cmd = app.add_subcommand("symbolic", "alias of eval --symbolic");
  add_eval_options(symbolic_cmd);

  std::string table_kind;
  int table_n = 0;
  std::string table_format = "csv";
  CLI::App* table_cmd = app.add_subcommand("table", "dump an exact coefficient table");
  table_cmd->add_option("--kind", table_kind, "g|h|c|d|u|v|x|y|dN")->required();
  table_cmd->add_option("--n", table_n, "size (N for dN)")->required();
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

  unsigned const_bits = bits0;
  std::string const_format = "text";
  CLI::App* const_cmd = app.add_subcommand("constants", "print the named constants");
  const_cmd->add_option("--bits", const_bits)->check(bits_check);
  const_cmd->add_option("--format", const_format)->check(formats);

  VerifyArgs verify;
  verify.bits = bits0;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run identity suites and write a JSON report");
  verify_cmd->add_option("--suite", verify.suite)->check(CLI::IsMember(hypint::suite_names()));
  verify_cmd->add_option("--trials", verify.trials)->check(CLI::Range(1, 100000));
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--bits", verify.bits)->check(bits_check);
  verify_cmd->add_option("--out", verify.out, "report path; stdout when absent");
  verify_cmd->add_option("--tolerance", verify.tolerance, "tolerance floor replacing 2^-(bits-24)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", verify.threads, "worker threads, 0 = hardware");
  verify_cmd->add_flag("--no-wall-time", verify.no_wall_time, "omit wall_time from the report");

  std::string prod_s = "1/4";
  long prod_terms = 10000;
  unsigned prod_bits = bits0;
  std::string prod_format = "text";
  CLI::App* prod_cmd = app.add_subcommand("products", "partial log-product against its closed form");
  prod_cmd->add_option("--s", prod_s);
  prod_cmd->add_option("--terms", prod_terms);
  prod_cmd->add_option("--bits", prod_bits)->check(bits_check);
  prod_cmd->add_option("--format", prod_format)->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval);
    if (*symbolic_cmd) {
      eval.symbolic = true;
      return cmd_eval(eval);
    }
    if (*table_cmd) return cmd_table(table_kind, table_n, table_format);
    if (*const_cmd) return cmd_constants(const_bits, const_format);
    if (*verify_cmd) return cmd_verify(verify);
    if (*prod_cmd) return cmd_products(prod_s, prod_terms, prod_bits, prod_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hypint::UnsupportedParameter& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const hypint::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
