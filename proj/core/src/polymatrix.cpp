#include "toda/polymatrix.hpp"

#include <stdexcept>

namespace toda {

namespace {

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
}

}  // namespace

PolyMatrix::PolyMatrix(int dim, int rank)
    : dim_(dim), rank_(rank), entries_(dim * dim, DiffPoly(rank)) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
}

PolyMatrix PolyMatrix::identity(int dim, int rank) {
  PolyMatrix m(dim, rank);
  for (int i = 0; i < dim; ++i) m.at(i, i) = DiffPoly::constant(rank, Rat(1));
  return m;
}

PolyMatrix PolyMatrix::from_rational(const RatMatrix& m, int rank) {
  PolyMatrix out(static_cast<int>(m.size()), rank);
  for (int i = 0; i < out.dim_; ++i)
    for (int j = 0; j < out.dim_; ++j)
      if (m[i][j] != 0) out.at(i, j) = DiffPoly::constant(rank, m[i][j]);
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(dim_, rank_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
  return out;
}

PolyMatrix PolyMatrix::scaled(const DiffPoly& p) const {
  PolyMatrix out(dim_, rank_);
  for (int i = 0; i < dim_ * dim_; ++i) out.entries_[i] = entries_[i] * p;
  return out;
}

PolyMatrix PolyMatrix::scaled(const Rat& c) const {
  PolyMatrix out(dim_, rank_);
  for (int i = 0; i < dim_ * dim_; ++i) out.entries_[i] = c * entries_[i];
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] += b.entries_[i];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] -= b.entries_[i];
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  const int m = a.dim_;
  PolyMatrix out(m, a.rank_);
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < m; ++t) {
      const DiffPoly& x = a.at(i, t);
      if (x.is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        const DiffPoly& y = b.at(t, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  return out;
}

PolyMatrix pm_dx(const PolyMatrix& m, const CartanMatrix* cartan) {
  PolyMatrix out(m.dim(), m.rank());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out.at(i, j) = d_x(m.at(i, j), cartan);
  return out;
}

PolyMatrix pm_dy(const PolyMatrix& m, const CartanMatrix& cartan) {
  PolyMatrix out(m.dim(), m.rank());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out.at(i, j) = d_y_toda(m.at(i, j), cartan);
  return out;
}

PolyMatrix exp_nilpotent(const PolyMatrix& z) {
  PolyMatrix sum = PolyMatrix::identity(z.dim(), z.rank());
  PolyMatrix power = sum;
  Rat inv_factorial(1);
  for (int k = 1;; ++k) {
    power = power * z;
    if (power.is_zero()) break;
    if (k > z.dim()) throw std::invalid_argument("gauge element not nilpotent");
    inv_factorial /= k;
    sum = sum + power.scaled(inv_factorial);
  }
  return sum;
}

}  // namespace toda
