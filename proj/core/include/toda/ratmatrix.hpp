#pragma once

#include <optional>
#include <set>
#include <vector>

#include "toda/diffpoly.hpp"
#include "toda/rational.hpp"

namespace toda {

// Dense exact-rational matrix, row-major.
using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

RatMatrix rm_zero(int rows, int cols = -1);
// c * E_ij inside a dim x dim matrix.
RatMatrix rm_unit(int dim, int i, int j, const Rat& c = Rat(1));
RatMatrix rm_add(const RatMatrix& a, const RatMatrix& b);
RatMatrix rm_sub(const RatMatrix& a, const RatMatrix& b);
RatMatrix rm_scale(const RatMatrix& a, const Rat& c);
RatMatrix rm_mul(const RatMatrix& a, const RatMatrix& b);
// Matrix commutator ab - ba.
RatMatrix rm_bracket(const RatMatrix& a, const RatMatrix& b);
RatMatrix rm_transpose(const RatMatrix& a);
// Row-major flattening.
RatVector rm_vec(const RatMatrix& a);
bool rm_is_zero(const RatMatrix& a);

// Rank by exact Gaussian elimination.
int exact_rank(const std::vector<RatVector>& rows);

// Row indices that receive a pivot when eliminating column-by-column,
// always choosing the first still-unused row with a non-zero entry.
std::set<int> pivot_rows(const std::vector<RatVector>& rows);

// Solves sum_c x_c * cols[c] = rhs for the unique exact solution.
// Returns nullopt when the columns are dependent or the system is
// inconsistent.
std::optional<RatVector> solve_columns(const std::vector<RatVector>& cols,
                                       const RatVector& rhs);

// Same elimination with DiffPoly right-hand sides (the coefficient matrix
// stays rational, so the solve factors through scalar row operations).
// The columns must be independent and the system exactly consistent;
// throws std::runtime_error("decomposition not solvable") otherwise.
std::vector<DiffPoly> solve_columns_poly(const std::vector<RatVector>& cols,
                                         const std::vector<DiffPoly>& rhs);

}  // namespace toda
