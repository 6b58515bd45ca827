#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toda/cartan.hpp"
#include "toda/polymatrix.hpp"
#include "toda/ratmatrix.hpp"

namespace toda {

// The first fundamental matrix representation: diagonal Cartan generators
// H[i], raising generators E_plus[i], lowering generators E_minus[i], an
// optional invariant bilinear form (X^T form + form X = 0 for every
// generator), and the row/column permutation under which the positive part
// of the algebra is strictly upper triangular.
struct MatrixRep {
  int dim = 0;
  std::vector<RatMatrix> H;
  std::vector<RatMatrix> E_plus;
  std::vector<RatMatrix> E_minus;
  std::optional<RatMatrix> form;
  std::vector<int> borel_order;
};

MatrixRep first_fundamental_rep(const AlgebraSpec& spec);

// The single weight chain of the first fundamental representation for the
// non-branching families. weights[k] holds the integer coefficients of the
// k-th weight as a linear form on the first-derivative jets; edges[k] is
// the 0-based simple-root index subtracted between weights k and k+1.
struct WeightDiagram {
  std::vector<std::vector<int>> weights;
  std::vector<int> edges;
};

// Throws UnsupportedError("... representation branches") for family D.
WeightDiagram weight_diagram(const AlgebraSpec& spec);

// Basis of the algebra image organized by principal (height) grade; grades
// run from -top_grade to top_grade, with the Cartan part at grade 0.
struct GradedBasis {
  std::map<int, std::vector<RatMatrix>> by_grade;
  int top_grade = 0;
  int dim() const;
};

GradedBasis graded_basis(const AlgebraSpec& spec);

// canonical: deterministic complement choice from the graded-basis order.
// reference_d4: the fixed slice matrix positions the D4 golden values are
// pinned to (only valid for D4).
enum class SliceStyle { canonical, reference_d4 };

std::string slice_style_name(SliceStyle style);
// Accepts "canonical", "reference" and "reference_d4".
SliceStyle slice_style_parse(const std::string& text);

struct SliceElem {
  int grade;
  RatMatrix matrix;
  std::string label;
};

// Graded complement of [epsilon, g] inside the positive part; exactly
// rank-many elements, listed by ascending grade.
struct SliceBasis {
  AlgebraSpec spec;
  SliceStyle style = SliceStyle::canonical;
  std::vector<SliceElem> elems;
};

SliceBasis kostant_slice(const AlgebraSpec& spec,
                         SliceStyle style = SliceStyle::canonical);

// Sum of the lowering generators.
RatMatrix epsilon_matrix(const MatrixRep& rep);

// The three ingredients of the Lax connection: the diagonal polynomial
// matrix u = sum_i u^i_x H_i, the constant matrix epsilon, and
// Y = sum_i e^{rho_i} E_plus[i].
struct ConnectionParts {
  PolyMatrix u;
  RatMatrix epsilon;
  PolyMatrix Y;
};

ConnectionParts connection_parts(const AlgebraSpec& spec);

}  // namespace toda
