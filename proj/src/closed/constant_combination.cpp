#include "hypint/closed/constant_combination.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hypint/hiprec/constants.hpp"

namespace hypint {

namespace {

constexpr std::array<Basis, kBasisSize> kAll{
    Basis::kOne,   Basis::kLog2,      Basis::kLogPi,     Basis::kLogGammaQuarter,
    Basis::kBeta2, Basis::kBeta4,     Basis::kZeta3,     Basis::kZeta5,
    Basis::kZetaDotM1, Basis::kZetaDotM3, Basis::kBetaDotM2, Basis::kBetaDotM4};

constexpr std::array<std::string_view, kBasisSize> kNames{
    "1",         "log2",     "logpi",      "loggamma_quarter", "beta2_pi",   "beta4_pi3",
    "zeta3_pi2", "zeta5_pi4", "zetadot_m1", "zetadot_m3",       "betadot_m2", "betadot_m4"};

constexpr std::array<std::string_view, kBasisSize> kDisplay{
    "1",      "log(2)", "log(π)", "log Γ(1/4)", "β(2)/π", "β(4)/π³",
    "ζ(3)/π²", "ζ(5)/π⁴", "ζ'(-1)", "ζ'(-3)",   "β'(-2)", "β'(-4)"};

void append_term(std::string& out, const BigRational& c, std::string_view symbol) {
  if (c == 0) return;
  const bool neg = c < 0;
  const BigRational a = neg ? BigRational(-c) : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (symbol.empty()) {
    out += to_string(a);
  } else {
    if (a != 1) out += to_string(a) + "·";
    out += symbol;
  }
}

}  // namespace

std::string_view basis_name(Basis b) { return kNames[static_cast<std::size_t>(b)]; }

std::optional<Basis> parse_basis(std::string_view name) {
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    if (kNames[i] == name) return kAll[i];
  }
  return std::nullopt;
}

const std::array<Basis, kBasisSize>& all_basis() { return kAll; }

Real basis_value(Basis b, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  const Real pi = const_pi(wp);
  switch (b) {
    case Basis::kOne: return Real(1L, wp);
    case Basis::kLog2: return named_constant("log2", ctx);
    case Basis::kLogPi: return named_constant("logpi", ctx);
    case Basis::kLogGammaQuarter: return named_constant("loggamma_quarter", ctx);
    case Basis::kBeta2: return named_constant("beta2", ctx) / pi;
    case Basis::kBeta4: return named_constant("beta4", ctx) / pow(pi, 3L);
    case Basis::kZeta3: return named_constant("zeta3", ctx) / pow(pi, 2L);
    case Basis::kZeta5: return named_constant("zeta5", ctx) / pow(pi, 4L);
    case Basis::kZetaDotM1: return named_constant("zetadot_m1", ctx);
    case Basis::kZetaDotM3: return named_constant("zetadot_m3", ctx);
    case Basis::kBetaDotM2: return named_constant("betadot_m2", ctx);
    case Basis::kBetaDotM4: return named_constant("betadot_m4", ctx);
  }
  throw std::logic_error("basis_value: bad enum");
}

void ConstantCombination::add_log(const BigRational& c, const BigInt& m) {
  if (m < 1) throw std::invalid_argument("log term argument must be >= 1");
  if (m == 1 || c == 0) return;
  auto it = std::find_if(log_sum_.begin(), log_sum_.end(),
                         [&](const LogTerm& t) { return t.arg == m; });
  if (it == log_sum_.end()) {
    log_sum_.push_back({c, m});
    return;
  }
  it->coeff += c;
  if (it->coeff == 0) log_sum_.erase(it);
}

ConstantCombination ConstantCombination::normalized() const {
  ConstantCombination out;
  for (std::size_t i = 0; i < kBasisSize; ++i) out.coeffs_[i] = sign_ * coeffs_[i];
  for (const auto& t : log_sum_) out.add_log(sign_ * t.coeff, t.arg);
  std::sort(out.log_sum_.begin(), out.log_sum_.end(),
            [](const LogTerm& a, const LogTerm& b) { return a.arg < b.arg; });
  return out;
}

ConstantCombination ConstantCombination::scaled(const BigRational& q) const {
  ConstantCombination out = normalized();
  if (q == 0) return {};
  for (auto& c : out.coeffs_) c *= q;
  for (auto& t : out.log_sum_) t.coeff *= q;
  return out;
}

ConstantCombination& ConstantCombination::operator+=(const ConstantCombination& o) {
  *this = normalized();
  for (std::size_t i = 0; i < kBasisSize; ++i) coeffs_[i] += o.sign_ * o.coeffs_[i];
  for (const auto& t : o.log_sum_) add_log(o.sign_ * t.coeff, t.arg);
  return *this;
}

ConstantCombination& ConstantCombination::operator-=(const ConstantCombination& o) {
  return *this += o.scaled(-1);
}

bool ConstantCombination::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c == 0; }) &&
         log_sum_.empty();
}

bool operator==(const ConstantCombination& a, const ConstantCombination& b) {
  const ConstantCombination na = a.normalized();
  const ConstantCombination nb = b.normalized();
  return na.coeffs_ == nb.coeffs_ && na.log_sum_ == nb.log_sum_;
}

Real ConstantCombination::evaluate(const PrecisionContext& ctx) const {
  const mpfr_prec_t wp = ctx.working();
  Real sum(0L, wp);
  if (is_zero()) return sum;
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    if (coeffs_[i] == 0) continue;
    sum += Real(coeffs_[i], wp) * basis_value(kAll[i], ctx);
  }
  for (const auto& t : log_sum_) sum += Real(t.coeff, wp) * log(Real(t.arg, wp));
  return sign_ < 0 ? -sum : sum;
}

nlohmann::json ConstantCombination::to_json() const {
  const ConstantCombination n = normalized();
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    if (n.coeffs_[i] != 0) j[std::string(kNames[i])] = to_string(n.coeffs_[i]);
  }
  nlohmann::json logs = nlohmann::json::array();
  for (const auto& t : n.log_sum_) logs.push_back({to_string(t.coeff), to_string(t.arg)});
  j["log_sum"] = logs;
  return j;
}

ConstantCombination ConstantCombination::from_json(const nlohmann::json& j) {
  ConstantCombination out;
  for (const auto& [key, value] : j.items()) {
    if (key == "log_sum") {
      for (const auto& pair : value) {
        out.add_log(parse_rational(pair.at(0).get<std::string>()),
                    BigInt(pair.at(1).get<std::string>()));
      }
      continue;
    }
    const auto b = parse_basis(key);
    if (!b) throw std::invalid_argument("unknown basis constant: " + key);
    out.set(*b, parse_rational(value.get<std::string>()));
  }
  return out;
}

std::string ConstantCombination::to_text() const {
  const ConstantCombination n = normalized();
  std::string out;
  append_term(out, n.coeffs_[0], "");
  for (std::size_t i = 1; i < kBasisSize; ++i) append_term(out, n.coeffs_[i], kDisplay[i]);
  for (const auto& t : n.log_sum_) append_term(out, t.coeff, "log(" + to_string(t.arg) + ")");
  return out.empty() ? "0" : out;
}

}  // namespace hypint
