#include "hypint/exact/tables.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "hypint/errors.hpp"

namespace hypint {

namespace {

// Cache of the largest table built so far for each kind. Smaller requests
// are served by truncating a copy.
class TableCache {
 public:
  template <typename Build>
  CoeffTable get(TableKind kind, int n_max, Build&& build) {
    {
      std::lock_guard lock(mu_);
      auto it = tables_.find(kind);
      if (it != tables_.end() && it->second->max_row() >= n_max) {
        return truncate(*it->second, n_max);
      }
    }
    auto built = std::make_shared<const CoeffTable>(build());
    std::lock_guard lock(mu_);
    auto& slot = tables_[kind];
    if (!slot || slot->max_row() < built->max_row()) slot = built;
    return truncate(*built, n_max);
  }

 private:
  static CoeffTable truncate(const CoeffTable& t, int n_max) {
    if (t.max_row() == n_max) return t;
    CoeffTable out(t.kind(), n_max, t.param());
    for (const auto& [key, value] : t.entries()) {
      if (key.first <= n_max) out.set(key.first, key.second, value);
    }
    return out;
  }

  std::mutex mu_;
  std::map<TableKind, std::shared_ptr<const CoeffTable>> tables_;
};

TableCache& cache() {
  static TableCache instance;
  return instance;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void expect_equal(const CoeffTable& a, const CoeffTable& b, const std::string& what) {
  if (a.entries() == b.entries()) return;
  for (const auto& [key, value] : a.entries()) {
    if (b.at(key.first, key.second) != value) {
      throw ConsistencyError(what + " disagree at (" + std::to_string(key.first) + ", " +
                             std::to_string(key.second) + ")");
    }
  }
  throw ConsistencyError(what + " disagree");
}

// Row N holds weights w_{k,N} with w_{1,N} = 1 and
// w_{k,N} = sum_{j=k-1}^{N-1} w_{k-1,j} / denom(j)^2.
template <typename Denom>
CoeffTable nested_weights(TableKind kind, int n_max, Denom denom) {
  require(n_max >= 1, "n_max must be >= 1");
  const int rows = n_max + 1;
  CoeffTable t(kind, rows);
  for (int n = 1; n <= rows; ++n) t.set(n, 1, BigRational(1));
  for (int k = 2; k <= rows; ++k) {
    // Running sum over j gives every N in one pass.
    BigRational acc = 0;
    for (int n = k; n <= rows; ++n) {
      const int j = n - 1;
      const BigInt d = denom(j);
      acc += t.at(j, k - 1) / BigRational(d * d);
      t.set(n, k, acc);
    }
  }
  return t;
}

CoeffTable sech_by_sum(int n_max) {
  CoeffTable t(TableKind::kC, n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      BigInt acc = 0;
      for (int j = 0; j <= k; ++j) {
        BigInt term = binomial(2 * k + 1, k - j);
        BigInt base = 2 * j + 1;
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), 2 * n + 1);
        term *= p;
        if (j % 2 == 0) term = -term;
        acc += term;
      }
      t.set(n, k, make_rational(acc, BigInt(1)) * pow2(-2 * k));
    }
  }
  return t;
}

CoeffTable sech_by_recurrence(int n_max) {
  CoeffTable t(TableKind::kC, n_max);
  t.set(0, 0, BigRational(-1));
  for (int n = 0; n < n_max; ++n) {
    t.set(n + 1, 0, BigRational(-1));
    for (int k = 1; k <= n + 1; ++k) {
      const long a = 2L * k + 1;
      t.set(n + 1, k, BigRational(a * a) * t.at(n, k) - BigRational(2L * k * a) * t.at(n, k - 1));
    }
  }
  return t;
}

CoeffTable tanh_by_sum(int n_max) {
  CoeffTable t(TableKind::kD, n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      BigInt acc = 0;
      for (int j = 1; j <= k; ++j) {
        BigInt term = binomial(2 * k, k - j);
        BigInt base = 2 * j;
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), 2 * n);
        term *= p;
        if (j % 2 == 1) term = -term;
        acc += term;
      }
      t.set(n, k, make_rational(2 * acc, BigInt(1)) * pow2(-2 * k));
    }
  }
  return t;
}

CoeffTable tanh_by_recurrence(int n_max) {
  CoeffTable t(TableKind::kD, n_max);
  t.set(1, 1, BigRational(-2));
  for (int n = 1; n < n_max; ++n) {
    t.set(n + 1, 1, -pow2(2 * (n + 1) - 1));
    for (int k = 2; k <= n + 1; ++k) {
      t.set(n + 1, k,
            BigRational(4L * k * k) * t.at(n, k) -
                BigRational((2L * k - 1) * 2L * k) * t.at(n, k - 1));
    }
  }
  return t;
}

}  // namespace

bool cross_check_enabled(CrossCheck mode) {
  switch (mode) {
    case CrossCheck::kOn:
      return true;
    case CrossCheck::kOff:
      return false;
    case CrossCheck::kAuto:
      break;
  }
#ifdef NDEBUG
  return false;
#else
  return true;
#endif
}

CoeffTable g_table(int n_max) {
  return cache().get(TableKind::kG, n_max + 1, [n_max] {
    return nested_weights(TableKind::kG, n_max, [](int j) { return BigInt(2 * j - 1); });
  });
}

CoeffTable h_table(int n_max) {
  return cache().get(TableKind::kH, n_max + 1, [n_max] {
    return nested_weights(TableKind::kH, n_max, [](int j) { return BigInt(j); });
  });
}

CoeffTable sech_deriv_coeffs(int n_max, CrossCheck check) {
  require(n_max >= 0, "n_max must be >= 0");
  CoeffTable t = cache().get(TableKind::kC, n_max, [n_max] { return sech_by_sum(n_max); });
  if (cross_check_enabled(check)) {
    expect_equal(t, sech_by_recurrence(n_max), "sech derivative coefficients (sum vs recurrence)");
  }
  return t;
}

CoeffTable tanh_deriv_coeffs(int n_max, CrossCheck check) {
  require(n_max >= 1, "n_max must be >= 1");
  CoeffTable t = cache().get(TableKind::kD, n_max, [n_max] { return tanh_by_sum(n_max); });
  if (cross_check_enabled(check)) {
    expect_equal(t, tanh_by_recurrence(n_max), "tanh derivative coefficients (sum vs recurrence)");
  }
  return t;
}

NormalizedMatrices normalized_matrices(int n_max, CrossCheck check) {
  require(n_max >= 1, "n_max must be >= 1");
  const CoeffTable c = sech_deriv_coeffs(n_max, check);
  const CoeffTable d = tanh_deriv_coeffs(n_max, check);
  const CoeffTable g = g_table(n_max);
  const CoeffTable h = h_table(n_max);

  NormalizedMatrices m{CoeffTable(TableKind::kU, n_max), CoeffTable(TableKind::kV, n_max),
                       CoeffTable(TableKind::kX, n_max), CoeffTable(TableKind::kY, n_max)};
  for (int n = 0; n <= n_max; ++n) {
    const BigRational su = BigRational(sign_pow(n + 1)) / BigRational(factorial(2 * n + 1));
    const BigRational sv = BigRational(binomial(2 * n, n)) / BigRational(BigInt(2 * n + 1)) *
                           pow2(-2 * n);
    for (int k = 0; k <= n; ++k) {
      m.u.set(n, k, su * c.at(n, k));
      m.v.set(n, k, BigRational(factorial(2 * k + 1)) * sv * g.at(n + 1, k + 1));
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    const BigRational sx = BigRational(sign_pow(n)) / BigRational(factorial(2 * n));
    const BigRational sy =
        BigRational(1) / BigRational(BigInt(n) * n * binomial(2 * n, n));
    for (int k = 1; k <= n; ++k) {
      m.x.set(n, k, sx * d.at(n, k));
      m.y.set(n, k, BigRational(factorial(2 * k)) * pow2(2 * n - 2 * k) * sy * h.at(n, k));
    }
  }
  if (cross_check_enabled(check)) {
    expect_equal(m.v, unit_lower_inverse(m.u, 0, TableKind::kV), "closed-form and computed v");
    expect_equal(m.y, unit_lower_inverse(m.x, 1, TableKind::kY), "closed-form and computed y");
  }
  return m;
}

CoeffTable dN_table(int n) {
  require(n >= 2, "N must be >= 2");
  CoeffTable t(TableKind::kDN, n - 1, n);
  t.set(0, 0, BigRational(1));
  for (int p = 1; p <= n - 1; ++p) {
    for (int k = 1; k <= p; ++k) {
      t.set(p, 2 * k,
            BigRational(-2 * k) * t.at(p - 1, 2 * k) +
                BigRational(n - p - 1 + 2 * k) * t.at(p - 1, 2 * k - 2));
    }
  }
  return t;
}

CoeffTable reduction_coeffs(int n, const BigRational& l) {
  require(n >= 1, "N must be >= 1");
  CoeffTable t(TableKind::kDN, n - 1, n);
  t.set(0, 0, BigRational(1));
  for (int p = 1; p <= n - 1; ++p) {
    const BigRational inv = BigRational(1) / BigRational(n - p);
    for (int k = 0; k <= p; ++k) {
      BigRational value = -(l + 2 * k) * inv * t.at(p - 1, 2 * k);
      if (k > 0) value += (l + (n - p - 1 + 2 * k)) * inv * t.at(p - 1, 2 * k - 2);
      t.set(p, 2 * k, value);
    }
  }
  return t;
}

CoeffTable unit_lower_inverse(const CoeffTable& m, int first, TableKind result_kind) {
  const int last = m.max_row();
  CoeffTable inv(result_kind, last);
  for (int col = first; col <= last; ++col) {
    if (m.at(col, col) != 1) throw ConsistencyError("matrix is not unit lower-triangular");
    inv.set(col, col, BigRational(1));
    for (int row = col + 1; row <= last; ++row) {
      BigRational acc = 0;
      for (int j = col; j < row; ++j) acc -= m.at(row, j) * inv.at(j, col);
      inv.set(row, col, acc);
    }
  }
  return inv;
}

CoeffTable multiply(const CoeffTable& a, const CoeffTable& b, int first, TableKind result_kind) {
  const int last = std::min(a.max_row(), b.max_row());
  CoeffTable out(result_kind, last);
  for (int row = first; row <= last; ++row) {
    for (int col = first; col <= last; ++col) {
      BigRational acc = 0;
      for (int j = first; j <= last; ++j) acc += a.at(row, j) * b.at(j, col);
      out.set(row, col, acc);
    }
  }
  return out;
}

}  // namespace hypint
