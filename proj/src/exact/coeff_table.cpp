#include "hypint/exact/coeff_table.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hypint {

namespace {

constexpr std::array<std::pair<TableKind, std::string_view>, 9> kKindNames{{
    {TableKind::kG, "g"},
    {TableKind::kH, "h"},
    {TableKind::kC, "c"},
    {TableKind::kD, "d"},
    {TableKind::kU, "u"},
    {TableKind::kV, "v"},
    {TableKind::kX, "x"},
    {TableKind::kY, "y"},
    {TableKind::kDN, "dN"},
}};

}  // namespace

std::string_view kind_name(TableKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<TableKind> parse_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

BigRational CoeffTable::at(int row, int col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? BigRational(0) : it->second;
}

void CoeffTable::set(int row, int col, BigRational value) {
  if (value == 0) {
    entries_.erase({row, col});
    return;
  }
  entries_[{row, col}] = std::move(value);
}

bool CoeffTable::operator==(const CoeffTable& other) const {
  return kind_ == other.kind_ && max_row_ == other.max_row_ && param_ == other.param_ &&
         entries_ == other.entries_;
}

std::string to_csv(const CoeffTable& table) {
  std::ostringstream out;
  out << "N,k,numerator,denominator\n";
  for (const auto& [key, value] : table.entries()) {
    out << key.first << ',' << key.second << ',' << value.get_num().get_str(10) << ','
        << value.get_den().get_str(10) << '\n';
  }
  return out.str();
}

std::string to_json(const CoeffTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, value] : table.entries()) {
    rows.push_back({{"n", key.first},
                    {"k", key.second},
                    {"num", value.get_num().get_str(10)},
                    {"den", value.get_den().get_str(10)}});
  }
  return rows.dump();
}

CoeffTable parse_csv(std::string_view csv, TableKind kind, int param) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != "N,k,numerator,denominator") {
    throw std::invalid_argument("missing CSV header");
  }
  CoeffTable table(kind, 0, param);
  int max_row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<std::string, 4> fields;
    std::istringstream row(line);
    for (auto& f : fields) {
      if (!std::getline(row, f, ',')) throw std::invalid_argument("short CSV row: " + line);
    }
    const int n = std::stoi(fields[0]);
    const int k = std::stoi(fields[1]);
    table.set(n, k, make_rational(BigInt(fields[2]), BigInt(fields[3])));
    max_row = std::max(max_row, n);
  }
  CoeffTable out(kind, max_row, param);
  for (const auto& [key, value] : table.entries()) out.set(key.first, key.second, value);
  return out;
}

}  // namespace hypint
