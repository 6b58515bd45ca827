#pragma once

#include <string>
#include <vector>

#include "toda/diffop.hpp"
#include "toda/polymatrix.hpp"

namespace toda {

// Outcome of one independent check. `residual_terms` counts the monomials
// that witness a failure (0 when ok); `first_failing_monomials` holds up
// to a handful of printed witnesses.
struct CheckReport {
  bool ok = true;
  long residual_terms = 0;
  std::vector<std::string> first_failing_monomials;
};

// True iff d_y annihilates I on solutions of the Toda system of `spec`.
// I must be exponential-free.
bool is_characteristic_integral(const DiffPoly& I, const AlgebraSpec& spec);
CheckReport check_characteristic_integral(const DiffPoly& I,
                                          const AlgebraSpec& spec,
                                          const std::string& label = "");

// Runs check_characteristic_integral over every integral and residual in
// the set (under the set's own spec) and merges the reports.
CheckReport check_integral_set(const IntegralSet& set);

// Symbolic expansion of the compatibility commutator of the Lax pair;
// the zero matrix certifies that the pair reproduces the Toda system.
PolyMatrix zero_curvature_residual(const AlgebraSpec& spec);
CheckReport check_zero_curvature(const AlgebraSpec& spec);

// The degrees of the primitive characteristic integrals of the algebra,
// sorted ascending (A_n: 2..n+1; B_n/C_n: 2,4,..,2n; D_n: 2,4,..,2n-2
// plus n; G2: 2,6).
std::vector<int> degree_list(const AlgebraSpec& spec);

// True iff every integral in the set is homogeneous of its declared degree
// and the degree multiset equals degree_list(spec).
bool degree_audit(const IntegralSet& set, const AlgebraSpec& spec);
CheckReport check_degrees(const IntegralSet& set, const AlgebraSpec& spec);

}  // namespace toda
