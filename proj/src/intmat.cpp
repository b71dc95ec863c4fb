#include "gcl/intmat.hpp"

#include <algorithm>
#include <utility>

namespace gcl {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

namespace {

void row_axpy(std::vector<Int>& dst, const std::vector<Int>& src, const Int& q) {
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] -= q * src[j];
}

// Integer row echelon on the first `pivot_cols` columns; returns the rank.
std::size_t echelon(IntMatrix& m, std::size_t pivot_cols) {
  std::size_t prow = 0;
  for (std::size_t col = 0; col < pivot_cols && prow < m.size(); ++col) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = prow; i < m.size(); ++i)
        if (m[i][col] != 0 && (best == m.size() || abs(m[i][col]) < abs(m[best][col]))) best = i;
      if (best == m.size()) break;
      std::swap(m[prow], m[best]);
      bool clean = true;
      for (std::size_t i = prow + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        Int q = m[i][col] / m[prow][col];
        row_axpy(m[i], m[prow], q);
        if (m[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (prow < m.size() && m[prow][col] != 0) {
      if (m[prow][col] < 0)
        for (auto& v : m[prow]) v = -v;
      ++prow;
    }
  }
  return prow;
}

}  // namespace

IntMatrix hnf(IntMatrix rows, std::size_t ncols) {
  for (auto& r : rows) r.resize(ncols, 0);
  std::size_t rk = echelon(rows, ncols);
  rows.resize(rk);
  for (std::size_t i = 0; i < rk; ++i) {
    std::size_t col = 0;
    while (rows[i][col] == 0) ++col;
    for (std::size_t k = 0; k < i; ++k) {
      Int q = floor_div(rows[k][col], rows[i][col]);
      if (q != 0) row_axpy(rows[k], rows[i], q);
    }
  }
  return rows;
}

std::size_t rank(const IntMatrix& rows, std::size_t ncols) {
  IntMatrix m = rows;
  for (auto& r : m) r.resize(ncols, 0);
  return echelon(m, ncols);
}

SmithForm smith_normal_form(const IntMatrix& a) {
  std::size_t m = a.size();
  std::size_t n = m ? a[0].size() : 0;
  SmithForm s{a, identity_matrix(m), identity_matrix(n)};
  auto& D = s.D;
  auto swap_cols = [&](IntMatrix& x, std::size_t c1, std::size_t c2) {
    for (auto& row : x) std::swap(row[c1], row[c2]);
  };
  auto col_axpy = [&](IntMatrix& x, std::size_t dst, std::size_t src, const Int& q) {
    for (auto& row : x) row[dst] -= q * row[src];
  };
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D[i][j] != 0 && (bi == m || abs(D[i][j]) < abs(D[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m) return s;
      if (bi != t) {
        std::swap(D[t], D[bi]);
        std::swap(s.U[t], s.U[bi]);
      }
      if (bj != t) {
        swap_cols(D, t, bj);
        swap_cols(s.V, t, bj);
      }
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        Int q = D[i][t] / D[t][t];
        row_axpy(D[i], D[t], q);
        row_axpy(s.U[i], s.U[t], q);
        if (D[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        Int q = D[t][j] / D[t][t];
        col_axpy(D, j, t, q);
        col_axpy(s.V, j, t, q);
        if (D[t][j] != 0) dirty = true;
      }
      if (dirty) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_axpy(D[t], D[bad], Int(-1));
      row_axpy(s.U[t], s.U[bad], Int(-1));
    }
    if (D[t][t] < 0) {
      for (auto& v : D[t]) v = -v;
      for (auto& v : s.U[t]) v = -v;
    }
  }
  return s;
}

IntMatrix kernel_basis(const IntMatrix& a, std::size_t ncols) {
  // Row-reduce [a^T | I]; rows whose left block vanishes carry the kernel.
  std::size_t k = a.size();
  IntMatrix aug(ncols, std::vector<Int>(k + ncols, 0));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug[j][i] = a[i][j];
    aug[j][k + j] = 1;
  }
  std::size_t rk = echelon(aug, k);
  IntMatrix ker;
  for (std::size_t r = rk; r < ncols; ++r) ker.emplace_back(aug[r].begin() + k, aug[r].end());
  return hnf(ker, ncols);
}

std::optional<std::vector<Rat>> solve_rational(const RatMatrix& a, const std::vector<Rat>& b,
                                               std::size_t ncols, std::size_t* rank_out) {
  std::size_t m = a.size();
  RatMatrix aug(m, std::vector<Rat>(ncols + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < ncols && j < a[i].size(); ++j) aug[i][j] = a[i][j];
    aug[i][ncols] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < ncols && prow < m; ++col) {
    std::size_t p = prow;
    while (p < m && aug[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[prow]);
    Rat inv = 1 / aug[prow][col];
    for (auto& v : aug[prow]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == prow || aug[i][col] == 0) continue;
      Rat q = aug[i][col];
      for (std::size_t j = col; j <= ncols; ++j) aug[i][j] -= q * aug[prow][j];
    }
    pivots.push_back(col);
    ++prow;
  }
  if (rank_out) *rank_out = prow;
  for (std::size_t i = prow; i < m; ++i)
    if (aug[i][ncols] != 0) return std::nullopt;
  std::vector<Rat> x(ncols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][ncols];
  return x;
}

}  // namespace gcl
