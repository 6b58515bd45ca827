#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toda/diffpoly.hpp"
#include "toda/liedata.hpp"

namespace toda {

// Polynomial in the derivative symbol with DiffPoly coefficients,
// composed non-commutatively. Coefficients are keyed by the power of the
// derivative symbol; zero coefficients are never stored.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(int rank);

  // The bare derivative symbol.
  static DiffOp derivative(int rank);
  static DiffOp from_coeffs(int rank, std::map<int, DiffPoly> coeffs);

  int rank() const { return rank_; }
  // Highest stored power; -1 for the zero operator.
  int degree() const;
  const std::map<int, DiffPoly>& coeffs() const { return coeffs_; }
  // Zero polynomial when the power is absent.
  DiffPoly coeff(int power) const;
  void set_coeff(int power, const DiffPoly& p);

  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.rank_ == b.rank_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int rank_ = 0;
  std::map<int, DiffPoly> coeffs_;
};

// Operator composition L∘M via the derivation rule, associative and
// generally non-commutative. `cartan` is needed only when coefficients
// carry exponential factors.
DiffOp compose(const DiffOp& L, const DiffOp& M,
               const CartanMatrix* cartan = nullptr);

// Left-to-right product of the first-order factors read off the weight
// chain of the first fundamental representation. Monic; degree equals the
// representation dimension. Throws UnsupportedError for family D.
DiffOp factorized_product(const AlgebraSpec& spec);

struct Integral {
  std::string label;
  int degree;
  DiffPoly poly;
};

// Ordered characteristic integrals with their declared degrees, plus the
// residual odd-position coefficients (J's) where the family has them.
struct IntegralSet {
  AlgebraSpec spec;
  std::string method;             // "quick" or "ds"
  std::string slice_description;  // slice style for the ds method
  std::vector<Integral> integrals;
  std::vector<Integral> residuals;
};

// Splits the coefficients of a factorized product into the primitive
// integrals I_j (at the family's designated derivative powers) and the
// residual coefficients J_j. Throws std::runtime_error if the operator is
// not monic of the expected degree.
IntegralSet extract_integrals(const DiffOp& L, const AlgebraSpec& spec);

struct JRelationReport {
  bool ok = true;
  // Label of each failed identity with the non-zero difference.
  std::vector<std::pair<std::string, DiffPoly>> failures;
};

// Checks the four G2 identities expressing J_1..J_4 through I_1 and I_2,
// as exact polynomial identities.
JRelationReport check_j_relations_g2(const IntegralSet& set);

}  // namespace toda
