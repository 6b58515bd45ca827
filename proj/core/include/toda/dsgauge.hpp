#pragma once

#include <vector>

#include "toda/diffop.hpp"
#include "toda/liedata.hpp"
#include "toda/polymatrix.hpp"

namespace toda {

struct TranscriptStep {
  int grade;     // grade of the nilpotent element used at this step
  PolyMatrix z;
};

// Output of the gauge reduction: the unipotent gauge element g (ordered
// product of the transcript exponentials), the integrals read off along
// the slice, and the reduced connection epsilon + sum_j I_j s_j.
struct GaugeResult {
  PolyMatrix g;
  IntegralSet integrals;
  SliceBasis slice;
  std::vector<TranscriptStep> transcript;
  PolyMatrix final_connection;
};

// Gauge action on the full connection matrix: returns
// e^{-z} * connection * e^{z} - e^{-z} * d_x(e^{z}).
// z must be nilpotent; entries may be polynomial.
PolyMatrix gauge_by_exp(const PolyMatrix& connection, const PolyMatrix& z,
                        const CartanMatrix& cartan);

// Height-inductive reduction of -d_x + epsilon + u to
// -d_x + epsilon + sum_j I_j s_j along the given slice. One constant-
// coefficient exact linear solve per grade; throws std::runtime_error
// naming the grade if a decomposition fails.
GaugeResult reduce_to_slice(const AlgebraSpec& spec, const SliceBasis& slice);
GaugeResult reduce_to_slice(const AlgebraSpec& spec,
                            SliceStyle style = SliceStyle::canonical);

// The algebraic-degree-1 part of I in canonical term order; a positive
// count keeps only the first `count` such terms.
DiffPoly leading_terms(const DiffPoly& I, int count = 0);

}  // namespace toda
