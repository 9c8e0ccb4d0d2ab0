#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "hypint/exact/rational.hpp"

namespace hypint {

enum class TableKind {
  kG,   // g_{k,N}: beta recurrence weights, row N >= 1, col 1 <= k <= N
  kH,   // h_{k,N}: zeta recurrence weights, row N >= 1, col 1 <= k <= N
  kC,   // c_{N,k}: odd sech derivative coefficients, row/col from 0
  kD,   // d_{N,k}: even tanh derivative coefficients, row/col from 1
  kU,   // u = normalized c (unit diagonal)
  kV,   // v = u^{-1}
  kX,   // x = normalized d (unit diagonal)
  kY,   // y = x^{-1}
  kDN,  // d_N(p, 2k) for a fixed N; row p, col 2k
};

std::string_view kind_name(TableKind kind);
std::optional<TableKind> parse_kind(std::string_view name);

// Sparse lower-triangular exact matrix. Absent entries are zero.
class CoeffTable {
 public:
  CoeffTable(TableKind kind, int max_row, int param = 0)
      : kind_(kind), max_row_(max_row), param_(param) {}

  TableKind kind() const { return kind_; }
  int max_row() const { return max_row_; }
  // The fixed N for kDN tables; zero otherwise.
  int param() const { return param_; }

  BigRational at(int row, int col) const;
  void set(int row, int col, BigRational value);

  const std::map<std::pair<int, int>, BigRational>& entries() const { return entries_; }

  bool operator==(const CoeffTable& other) const;

 private:
  TableKind kind_;
  int max_row_;
  int param_;
  std::map<std::pair<int, int>, BigRational> entries_;
};

// CSV with header "N,k,numerator,denominator", one row per stored entry in
// (row, col) order.
std::string to_csv(const CoeffTable& table);
// JSON array of {"n": row, "k": col, "num": "...", "den": "..."}.
std::string to_json(const CoeffTable& table);

// Inverse of to_csv; the kind is not encoded in the CSV and must be supplied.
CoeffTable parse_csv(std::string_view csv, TableKind kind, int param = 0);

}  // namespace hypint
