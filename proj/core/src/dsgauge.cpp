#include "toda/dsgauge.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace toda {

PolyMatrix gauge_by_exp(const PolyMatrix& connection, const PolyMatrix& z,
                        const CartanMatrix& cartan) {
  const PolyMatrix ez = exp_nilpotent(z);
  const PolyMatrix emz = exp_nilpotent(z.scaled(Rat(-1)));
  return emz * connection * ez - emz * pm_dx(ez, &cartan);
}

namespace {

// Exact coordinates of q over the full graded basis, resummed over the
// elements of one grade.
PolyMatrix grade_component(const PolyMatrix& q,
                           const std::vector<std::pair<int, RatMatrix>>& elems,
                           const std::vector<RatVector>& cols, int grade) {
  const int m = q.dim();
  std::vector<DiffPoly> rhs;
  rhs.reserve(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) rhs.push_back(q.at(a, b));
  const std::vector<DiffPoly> sol = solve_columns_poly(cols, rhs);
  PolyMatrix out(m, q.rank());
  for (std::size_t t = 0; t < elems.size(); ++t) {
    if (elems[t].first != grade || sol[t].is_zero()) continue;
    out = out + PolyMatrix::from_rational(elems[t].second, q.rank())
                    .scaled(sol[t]);
  }
  return out;
}

}  // namespace

GaugeResult reduce_to_slice(const AlgebraSpec& spec, const SliceBasis& slice) {
  validate(spec);
  if (!(slice.spec == spec))
    throw std::invalid_argument("slice does not match algebra");
  const MatrixRep rep = first_fundamental_rep(spec);
  const GradedBasis basis = graded_basis(spec);
  const CartanMatrix cartan = cartan_matrix(spec);
  const RatMatrix eps = epsilon_matrix(rep);
  const int m = rep.dim;
  const int n = spec.rank;
  const int p = basis.top_grade;

  const ConnectionParts parts = connection_parts(spec);
  const PolyMatrix eps_poly = PolyMatrix::from_rational(eps, n);
  PolyMatrix connection = eps_poly + parts.u;

  std::vector<std::pair<int, RatMatrix>> all_elems;
  for (const auto& [g, elems] : basis.by_grade)
    for (const auto& x : elems) all_elems.emplace_back(g, x);
  std::vector<RatVector> all_cols;
  all_cols.reserve(all_elems.size());
  for (const auto& [g, x] : all_elems) all_cols.push_back(rm_vec(x));

  GaugeResult result;
  result.slice = slice;
  result.g = PolyMatrix::identity(m, n);
  std::vector<DiffPoly> coords(slice.elems.size(), DiffPoly(n));

  for (int k = 1; k <= p + 1; ++k) {
    const int grade = k - 1;
    const PolyMatrix q = connection - eps_poly;
    const PolyMatrix r = grade_component(q, all_elems, all_cols, grade);

    std::vector<std::size_t> slice_here;
    for (std::size_t i = 0; i < slice.elems.size(); ++i)
      if (slice.elems[i].grade == grade) slice_here.push_back(i);
    const std::vector<RatMatrix>* zbasis = nullptr;
    if (k <= p) {
      auto it = basis.by_grade.find(k);
      if (it != basis.by_grade.end()) zbasis = &it->second;
    }

    std::vector<RatVector> cols;
    for (std::size_t i : slice_here)
      cols.push_back(rm_vec(slice.elems[i].matrix));
    if (zbasis)
      for (const auto& x : *zbasis) cols.push_back(rm_vec(rm_bracket(eps, x)));

    std::vector<DiffPoly> rhs;
    rhs.reserve(m * m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) rhs.push_back(r.at(a, b));

    std::vector<DiffPoly> sol;
    try {
      sol = solve_columns_poly(cols, rhs);
    } catch (const std::runtime_error&) {
      throw std::runtime_error("decomposition not solvable at grade " +
                               std::to_string(grade));
    }
    for (std::size_t t = 0; t < slice_here.size(); ++t)
      coords[slice_here[t]] = sol[t];
    if (k > p) break;

    PolyMatrix z(m, n);
    if (zbasis)
      for (std::size_t t = 0; t < zbasis->size(); ++t) {
        const DiffPoly& c = sol[slice_here.size() + t];
        if (!c.is_zero())
          z = z + PolyMatrix::from_rational((*zbasis)[t], n).scaled(-c);
      }
    result.transcript.push_back({k, z});
    connection = gauge_by_exp(connection, z, cartan);
    result.g = result.g * exp_nilpotent(z);
  }

  result.final_connection = connection;
  result.integrals.spec = spec;
  result.integrals.method = "ds";
  result.integrals.slice_description = slice_style_name(slice.style);
  for (std::size_t i = 0; i < slice.elems.size(); ++i)
    result.integrals.integrals.push_back({"I_" + std::to_string(i + 1),
                                          slice.elems[i].grade + 1,
                                          coords[i]});
  return result;
}

GaugeResult reduce_to_slice(const AlgebraSpec& spec, SliceStyle style) {
  return reduce_to_slice(spec, kostant_slice(spec, style));
}

DiffPoly leading_terms(const DiffPoly& I, int count) {
  DiffPoly out(I.rank());
  int kept = 0;
  for (const auto& [m, c] : I.terms()) {
    if (m.algebraic_degree() != 1) continue;
    if (count > 0 && kept >= count) break;
    out.add_term(m, c);
    ++kept;
  }
  return out;
}

}  // namespace toda
