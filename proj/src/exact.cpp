#include "stringcone/exact.hpp"

#include <limits>
#include <numeric>

namespace sc::exact {

BigVec toBig(std::span<const Int> v) {
  BigVec out;
  out.reserve(v.size());
  for (Int x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

IntVec toInt(const BigVec& v, const char* stage) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p())
      throw Error(ErrorCode::Internal, stage,
                  "integer entry " + x.get_str() + " exceeds 64-bit range");
    out.push_back(x.get_si());
  }
  return out;
}

BigInt dot(const BigVec& a, const BigVec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  if (s > std::numeric_limits<Int>::max() || s < std::numeric_limits<Int>::min())
    throw Error(ErrorCode::Internal, "arith", "dot product overflow");
  return static_cast<Int>(s);
}

void makePrimitive(BigVec& v) {
  BigInt g = 0;
  for (const auto& x : v) {
    if (x != 0) g = gcd(g, x);
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& x : v) x /= g;
}

IntVec primitive(IntVec v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

BigVec clearDenominators(const QVec& v) {
  BigInt l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  BigVec out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(q.get_num() * (l / q.get_den()));
  makePrimitive(out);
  return out;
}

bool RowEchelon::add(const BigVec& row) {
  QVec r(row.begin(), row.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = r[pivots_[k]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (rows_[k][j] != 0) r[j] -= c * rows_[k][j];
  }
  std::size_t p = 0;
  while (p < dim_ && r[p] == 0) ++p;
  if (p == dim_) return false;
  const Rational lead = r[p];
  for (auto& x : r) x /= lead;
  // keep accepted rows reduced in the new pivot column
  for (auto& other : rows_) {
    const Rational c = other[p];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (r[j] != 0) other[j] -= c * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

std::vector<QVec> RowEchelon::reduced() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<QVec> out;
  for (auto k : order) out.push_back(rows_[k]);
  return out;
}

std::size_t rank(const std::vector<BigVec>& rows, std::size_t dim) {
  RowEchelon e(dim);
  for (const auto& r : rows) {
    e.add(r);
    if (e.rank() == dim) break;
  }
  return e.rank();
}

std::vector<BigVec> nullspace(const std::vector<BigVec>& rows, std::size_t dim) {
  RowEchelon e(dim);
  for (const auto& r : rows) {
    e.add(r);
    if (e.rank() == dim) break;
  }
  const auto red = e.reduced();
  std::vector<bool> is_pivot(dim, false);
  std::vector<std::size_t> piv;
  for (const auto& r : red) {
    std::size_t p = 0;
    while (r[p] == 0) ++p;
    piv.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<BigVec> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    QVec v(dim, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < red.size(); ++k) v[piv[k]] = -red[k][f];
    basis.push_back(clearDenominators(v));
  }
  return basis;
}

std::optional<QVec> solve(const std::vector<BigVec>& columns, const BigVec& target) {
  const std::size_t m = target.size();
  const std::size_t k = columns.size();
  // augmented matrix, rows = coordinates
  std::vector<QVec> a(m, QVec(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = columns[j][i];
    a[i][k] = target[i];
  }
  std::vector<std::size_t> piv_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < m; ++c) {
    std::size_t p = row;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    const Rational lead = a[row][c];
    for (auto& x : a[row]) x /= lead;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    piv_col.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (a[i][k] != 0) return std::nullopt;
  QVec x(k, Rational(0));
  for (std::size_t r = 0; r < piv_col.size(); ++r) x[piv_col[r]] = a[r][k];
  return x;
}

Rational determinant(std::vector<QVec> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<std::vector<QVec>> inverse(std::vector<QVec> m) {
  const std::size_t n = m.size();
  std::vector<QVec> inv(n, QVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational lead = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= lead;
      inv[c][j] /= lead;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

namespace {

// Unimodular row reduction of `rows` restricted to the first `width` columns.
// Returns the number of leading nonzero rows; the rows below are zero on
// those columns. Pivot columns are recorded in `pivots`.
std::size_t echelonize(std::vector<BigVec>& rows, std::size_t width,
                       std::vector<std::size_t>* pivots = nullptr) {
  std::size_t top = 0;
  for (std::size_t c = 0; c < width && top < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool others = false;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
        for (std::size_t j = 0; j < rows[r].size(); ++j)
          if (rows[top][j] != 0) rows[r][j] -= q * rows[top][j];
        if (rows[r][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[top][c] != 0) {
      if (pivots) pivots->push_back(c);
      ++top;
    }
  }
  return top;
}

}  // namespace

std::vector<BigVec> hermiteNormalForm(std::vector<BigVec> rows) {
  if (rows.empty()) return rows;
  const std::size_t width = rows.front().size();
  std::vector<std::size_t> pivots;
  const std::size_t r = echelonize(rows, width, &pivots);
  rows.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t c = pivots[k];
    if (rows[k][c] < 0)
      for (auto& x : rows[k]) x = -x;
    for (std::size_t above = 0; above < k; ++above) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), rows[above][c].get_mpz_t(), rows[k][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < width; ++j) rows[above][j] -= q * rows[k][j];
    }
  }
  return rows;
}

std::vector<BigVec> integerKernel(const std::vector<BigVec>& vectors, std::size_t dim) {
  const std::size_t k = vectors.size();
  std::vector<BigVec> rows(k, BigVec(dim + k, BigInt(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < dim; ++j) rows[i][j] = vectors[i][j];
    rows[i][dim + i] = 1;
  }
  const std::size_t r = echelonize(rows, dim);
  std::vector<BigVec> kernel;
  for (std::size_t i = r; i < k; ++i)
    kernel.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(dim), rows[i].end());
  return hermiteNormalForm(std::move(kernel));
}

}  // namespace sc::exact
