#include "e6kit/linalg.hpp"

#include <algorithm>
#include <utility>

namespace e6kit {

namespace {

void pad(RatMatrix& m, std::size_t ncols) {
  for (auto& row : m) {
    if (row.size() > ncols) throw std::invalid_argument("row longer than column count");
    row.resize(ncols);
  }
}

// Index of the row at or below r with a nonzero entry in column c and the
// fewest nonzeros, to keep fill-in down on the sparse residue systems.
std::size_t choose_pivot(const RatMatrix& m, std::size_t r, std::size_t c) {
  std::size_t best = m.size();
  std::size_t best_nnz = 0;
  for (std::size_t i = r; i < m.size(); ++i) {
    if (sgn(m[i][c]) == 0) continue;
    std::size_t nnz = 0;
    for (const auto& x : m[i])
      if (sgn(x) != 0) ++nnz;
    if (best == m.size() || nnz < best_nnz) {
      best = i;
      best_nnz = nnz;
    }
  }
  return best;
}

void eliminate(RatMatrix& m, std::size_t ncols, std::vector<std::size_t>& pivots, bool reduce_above) {
  std::size_t r = 0;
  Rat f;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = choose_pivot(m, r, c);
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][c];
    for (std::size_t k = c; k < ncols; ++k)
      if (sgn(m[r][k]) != 0) m[r][k] *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t k = c; k < ncols; ++k)
      if (sgn(m[r][k]) != 0) nz.push_back(k);
    for (std::size_t i = reduce_above ? 0 : r + 1; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      f = m[i][c];
      for (std::size_t k : nz) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
}

}  // namespace

Echelon rref(RatMatrix m, std::size_t ncols) {
  pad(m, ncols);
  Echelon e;
  eliminate(m, ncols, e.pivots, true);
  e.rows = std::move(m);
  return e;
}

std::size_t rank(RatMatrix m, std::size_t ncols) {
  pad(m, ncols);
  std::vector<std::size_t> pivots;
  eliminate(m, ncols, pivots, false);
  return pivots.size();
}

RatMatrix nullspace(const RatMatrix& m, std::size_t ncols) {
  Echelon e = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(ncols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const RatMatrix& m, const RatVector& b, RatVector& x) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  std::size_t ncols = m.empty() ? 0 : m[0].size();
  RatMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(ncols);
    aug[i].push_back(b[i]);
  }
  Echelon e = rref(aug, ncols + 1);
  if (!e.pivots.empty() && e.pivots.back() == ncols) return false;
  x.assign(ncols, Rat(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rows[r][ncols];
  return true;
}

Int determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Int> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      Int q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      Int q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Pivot must divide the rest of the block.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

IntMatrix hermite_rows(IntMatrix m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    while (true) {
      std::size_t p = m.size();
      for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][c] != 0 && (p == m.size() || abs(m[i][c]) < abs(m[p][c]))) p = i;
      if (p == m.size()) break;
      std::swap(m[r], m[p]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= m.size() || m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

IntMatrix integer_kernel(const IntMatrix& m, std::size_t n) {
  // Unimodular column reduction of m, tracked in the identity appended below
  // it; columns that reduce to zero span the kernel lattice.
  const std::size_t rows = m.size();
  std::vector<IntVector> cols(n, IntVector(rows + n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rows; ++i) cols[j][i] = m[i][j];
    cols[j][rows + j] = 1;
  }
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows && r < n; ++i) {
    while (true) {
      std::size_t p = n;
      for (std::size_t j = r; j < n; ++j)
        if (cols[j][i] != 0 && (p == n || abs(cols[j][i]) < abs(cols[p][i]))) p = j;
      if (p == n) break;
      std::swap(cols[r], cols[p]);
      bool done = true;
      for (std::size_t j = r + 1; j < n; ++j) {
        if (cols[j][i] == 0) continue;
        Int q = cols[j][i] / cols[r][i];
        for (std::size_t k = 0; k < rows + n; ++k) cols[j][k] -= q * cols[r][k];
        if (cols[j][i] != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  IntMatrix kernel;
  for (std::size_t j = r; j < n; ++j) kernel.emplace_back(cols[j].begin() + rows, cols[j].end());
  return hermite_rows(std::move(kernel));
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) out[i].emplace_back(x);
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  IntMatrix c(a.size(), IntVector(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("multiply: dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace e6kit
