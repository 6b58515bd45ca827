#include "toda/ratmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace toda {

RatMatrix rm_zero(int rows, int cols) {
  if (cols < 0) cols = rows;
  return RatMatrix(rows, RatVector(cols, Rat(0)));
}

RatMatrix rm_unit(int dim, int i, int j, const Rat& c) {
  RatMatrix m = rm_zero(dim);
  m[i][j] = c;
  return m;
}

RatMatrix rm_add(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

RatMatrix rm_sub(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

RatMatrix rm_scale(const RatMatrix& a, const Rat& c) {
  RatMatrix out = a;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

RatMatrix rm_mul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t m = a.size(), k = b.size(), l = b.empty() ? 0 : b[0].size();
  RatMatrix out(m, RatVector(l, Rat(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      const Rat& x = a[i][t];
      if (x == 0) continue;
      for (std::size_t j = 0; j < l; ++j)
        if (b[t][j] != 0) out[i][j] += x * b[t][j];
    }
  return out;
}

RatMatrix rm_bracket(const RatMatrix& a, const RatMatrix& b) {
  return rm_sub(rm_mul(a, b), rm_mul(b, a));
}

RatMatrix rm_transpose(const RatMatrix& a) {
  if (a.empty()) return a;
  RatMatrix out(a[0].size(), RatVector(a.size(), Rat(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

RatVector rm_vec(const RatMatrix& a) {
  RatVector out;
  for (const auto& row : a) out.insert(out.end(), row.begin(), row.end());
  return out;
}

bool rm_is_zero(const RatMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns the pivot column list.
std::vector<int> rref_inplace(std::vector<RatVector>& m) {
  const int nr = static_cast<int>(m.size());
  const int nc = nr ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int sel = -1;
    for (int i = r; i < nr; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    const Rat inv = Rat(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (int j = 0; j < nc; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

int exact_rank(const std::vector<RatVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<RatVector> m = rows;
  return static_cast<int>(rref_inplace(m).size());
}

std::set<int> pivot_rows(const std::vector<RatVector>& rows) {
  std::vector<RatVector> m = rows;
  const int nr = static_cast<int>(m.size());
  const int nc = nr && !m[0].empty() ? static_cast<int>(m[0].size()) : 0;
  std::set<int> pivs;
  std::set<int> used;
  for (int c = 0; c < nc; ++c) {
    int sel = -1;
    for (int i = 0; i < nr; ++i)
      if (!used.count(i) && m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    used.insert(sel);
    pivs.insert(sel);
    for (int i = 0; i < nr; ++i) {
      if (i == sel || m[i][c] == 0) continue;
      const Rat f = m[i][c] / m[sel][c];
      for (int j = 0; j < nc; ++j) m[i][j] -= f * m[sel][j];
    }
  }
  return pivs;
}

std::optional<RatVector> solve_columns(const std::vector<RatVector>& cols,
                                       const RatVector& rhs) {
  const int nc = static_cast<int>(cols.size());
  const int nr = static_cast<int>(rhs.size());
  std::vector<RatVector> aug(nr, RatVector(nc + 1, Rat(0)));
  for (int i = 0; i < nr; ++i) {
    for (int c = 0; c < nc; ++c) aug[i][c] = cols[c][i];
    aug[i][nc] = rhs[i];
  }
  std::vector<int> piv = rref_inplace(aug);
  // Unique solvability: every unknown column carries a pivot and no pivot
  // falls on the right-hand side.
  if (static_cast<int>(piv.size()) < nc) return std::nullopt;
  for (int r = 0; r < static_cast<int>(piv.size()); ++r)
    if (piv[r] >= nc) return std::nullopt;
  RatVector x(nc, Rat(0));
  for (int r = 0; r < static_cast<int>(piv.size()); ++r) x[piv[r]] = aug[r][nc];
  for (int r = static_cast<int>(piv.size()); r < nr; ++r)
    if (aug[r][nc] != 0) return std::nullopt;
  return x;
}

std::vector<DiffPoly> solve_columns_poly(const std::vector<RatVector>& cols,
                                         const std::vector<DiffPoly>& rhs) {
  const int nc = static_cast<int>(cols.size());
  const int nr = static_cast<int>(rhs.size());
  std::vector<RatVector> a(nr, RatVector(nc, Rat(0)));
  for (int i = 0; i < nr; ++i)
    for (int c = 0; c < nc; ++c) a[i][c] = cols[c][i];
  std::vector<DiffPoly> aug = rhs;
  int r = 0;
  for (int c = 0; c < nc; ++c) {
    int sel = -1;
    for (int i = r; i < nr; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) throw std::runtime_error("decomposition not solvable");
    std::swap(a[r], a[sel]);
    std::swap(aug[r], aug[sel]);
    const Rat inv = Rat(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    aug[r] = inv * aug[r];
    for (int i = 0; i < nr; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (int j = 0; j < nc; ++j) a[i][j] -= f * a[r][j];
      aug[i] -= f * aug[r];
    }
    ++r;
  }
  for (int i = nc; i < nr; ++i) {
    bool zero_row = true;
    for (int j = 0; j < nc; ++j)
      if (a[i][j] != 0) {
        zero_row = false;
        break;
      }
    if (zero_row && !aug[i].is_zero())
      throw std::runtime_error("decomposition not solvable");
  }
  return {aug.begin(), aug.begin() + nc};
}

}  // namespace toda
