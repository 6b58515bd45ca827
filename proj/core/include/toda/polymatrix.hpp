#pragma once

#include <vector>

#include "toda/diffpoly.hpp"
#include "toda/ratmatrix.hpp"

namespace toda {

// Square matrix with DiffPoly entries, all sharing one ring rank.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int dim, int rank);

  static PolyMatrix identity(int dim, int rank);
  static PolyMatrix from_rational(const RatMatrix& m, int rank);

  int dim() const { return dim_; }
  int rank() const { return rank_; }

  DiffPoly& at(int i, int j) { return entries_[i * dim_ + j]; }
  const DiffPoly& at(int i, int j) const { return entries_[i * dim_ + j]; }

  bool is_zero() const;
  PolyMatrix transpose() const;
  // Entry-wise product with a polynomial / a scalar.
  PolyMatrix scaled(const DiffPoly& p) const;
  PolyMatrix scaled(const Rat& c) const;

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.dim_ == b.dim_ && a.rank_ == b.rank_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) {
    return !(a == b);
  }

 private:
  int dim_ = 0;
  int rank_ = 0;
  std::vector<DiffPoly> entries_;
};

PolyMatrix pm_dx(const PolyMatrix& m, const CartanMatrix* cartan = nullptr);
PolyMatrix pm_dy(const PolyMatrix& m, const CartanMatrix& cartan);

// exp(z) as the finite series for nilpotent z; throws
// std::invalid_argument("gauge element not nilpotent") if the powers of z
// fail to vanish by z^dim.
PolyMatrix exp_nilpotent(const PolyMatrix& z);

}  // namespace toda
