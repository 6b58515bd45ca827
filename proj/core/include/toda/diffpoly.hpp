#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "toda/cartan.hpp"
#include "toda/rational.hpp"

namespace toda {

// One jet symbol: the order-th x-derivative of field number `field`
// (0-based). Undifferentiated fields (order 0) are not representable;
// every constructor enforces order >= 1.
struct JetVar {
  int field;
  int order;

  friend bool operator==(const JetVar& a, const JetVar& b) {
    return a.field == b.field && a.order == b.order;
  }
  friend bool operator<(const JetVar& a, const JetVar& b) {
    if (a.field != b.field) return a.field < b.field;
    return a.order < b.order;
  }
};

// A product of jet-symbol powers and one formal exponential factor.
// `jets` is sorted by (field, order) with all powers >= 1; `exp` is the
// exponential multi-index (one entry per field, all >= 0), where entry i
// counts factors of the formal symbol e^{rho_i}.
struct Monomial {
  std::vector<std::pair<JetVar, int>> jets;
  std::vector<int> exp;

  // Sum over jets of order * power; exponential factors contribute 0.
  int degree() const;
  // Sum of the jet powers.
  int algebraic_degree() const;
  bool exp_free() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.jets == b.jets && a.exp == b.exp;
  }
};

// Total deterministic order used for canonical storage, printing and
// serialization: by total degree, then algebraic degree, then the jet
// sequence compared symbol-wise ((field, order) ascending; equal symbols
// by descending power), then the exponential multi-index.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse exact-rational polynomial in jet symbols and formal exponentials.
// Immutable in practice: every operation returns a fresh canonical value
// (no zero coefficients stored). The field count ("rank") is part of the
// value; operations on operands of different rank throw
// std::invalid_argument("rank mismatch").
class DiffPoly {
 public:
  using TermMap = std::map<Monomial, Rat, MonomialOrder>;

  DiffPoly() = default;
  explicit DiffPoly(int rank);

  static DiffPoly zero(int rank) { return DiffPoly(rank); }
  static DiffPoly constant(int rank, const Rat& c);
  static DiffPoly jet(int rank, int field, int order, int power = 1);
  // The formal exponential attached to field `field`.
  static DiffPoly exponential(int rank, int field);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  bool exp_free() const;

  // Accumulates c * m, dropping the entry if the coefficient cancels.
  void add_term(const Monomial& m, const Rat& c);

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& other);
  DiffPoly& operator-=(const DiffPoly& other);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) {
    a += b;
    return a;
  }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) {
    a -= b;
    return a;
  }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const Rat& c, const DiffPoly& p);
  friend bool operator==(const DiffPoly& a, const DiffPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const DiffPoly& a, const DiffPoly& b) {
    return !(a == b);
  }

  // True iff every term has the same degree (vacuously true for zero);
  // writes that degree to *degree_out when non-zero and homogeneous.
  bool homogeneous(int* degree_out = nullptr) const;

 private:
  int rank_ = 0;
  TermMap terms_;
};

// d/dx as a derivation: shifts jets up by one order; differentiates the
// exponential factor via the attached Cartan matrix. `cartan` may be null
// as long as the input is exponential-free; otherwise throws
// std::invalid_argument("Cartan matrix required").
DiffPoly d_x(const DiffPoly& p, const CartanMatrix* cartan = nullptr);
DiffPoly d_x_iter(const DiffPoly& p, int times,
                  const CartanMatrix* cartan = nullptr);

// d/dy on solutions of the Toda system attached to `cartan`: substitutes
// the defining equation for every mixed derivative. Defined only on
// exponential-free input; otherwise throws std::invalid_argument.
DiffPoly d_y_toda(const DiffPoly& p, const CartanMatrix& cartan);

// Splits p into homogeneous components keyed by degree; the components
// re-sum to p and the zero polynomial maps to the empty map.
std::map<int, DiffPoly> degree_decompose(const DiffPoly& p);

}  // namespace toda
