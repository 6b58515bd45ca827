#include "toda/liedata.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "toda/errors.hpp"

namespace toda {

namespace {

RatMatrix unit2(int dim, int i1, int j1, const Rat& c1, int i2, int j2,
                const Rat& c2) {
  RatMatrix m = rm_zero(dim);
  m[i1][j1] += c1;
  m[i2][j2] += c2;
  return m;
}

RatMatrix unit4(int dim, int i1, int j1, const Rat& c1, int i2, int j2,
                const Rat& c2, int i3, int j3, const Rat& c3, int i4, int j4,
                const Rat& c4) {
  RatMatrix m = rm_zero(dim);
  m[i1][j1] += c1;
  m[i2][j2] += c2;
  m[i3][j3] += c3;
  m[i4][j4] += c4;
  return m;
}

std::vector<int> iota_vec(int from, int to_inclusive, int step) {
  std::vector<int> out;
  for (int i = from; step > 0 ? i <= to_inclusive : i >= to_inclusive;
       i += step)
    out.push_back(i);
  return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

MatrixRep first_fundamental_rep(const AlgebraSpec& spec) {
  validate(spec);
  const int n = spec.rank;
  MatrixRep rep;
  switch (spec.family) {
    case Family::A: {
      const int m = n + 1;
      rep.dim = m;
      for (int i = 0; i < n; ++i) {
        rep.H.push_back(unit2(m, i, i, 1, i + 1, i + 1, -1));
        rep.E_plus.push_back(rm_unit(m, i, i + 1));
        rep.E_minus.push_back(rm_unit(m, i + 1, i));
      }
      rep.borel_order = iota_vec(0, m - 1, 1);
      return rep;
    }
    case Family::C: {
      const int m = 2 * n;
      rep.dim = m;
      for (int i = 0; i + 1 < n; ++i) {
        rep.H.push_back(unit4(m, i, i, 1, i + 1, i + 1, -1, n + i, n + i, -1,
                              n + i + 1, n + i + 1, 1));
        rep.E_plus.push_back(unit2(m, i, i + 1, 1, n + i + 1, n + i, -1));
        rep.E_minus.push_back(unit2(m, i + 1, i, 1, n + i, n + i + 1, -1));
      }
      rep.H.push_back(unit2(m, n - 1, n - 1, 1, 2 * n - 1, 2 * n - 1, -1));
      rep.E_plus.push_back(rm_unit(m, n - 1, 2 * n - 1));
      rep.E_minus.push_back(rm_unit(m, 2 * n - 1, n - 1));
      RatMatrix form = rm_zero(m);
      for (int i = 0; i < n; ++i) {
        form[i][n + i] = 1;
        form[n + i][i] = -1;
      }
      rep.form = form;
      rep.borel_order = concat(iota_vec(0, n - 1, 1), iota_vec(2 * n - 1, n, -1));
      return rep;
    }
    case Family::B: {
      const int m = 2 * n + 1;
      rep.dim = m;
      for (int i = 0; i + 1 < n; ++i) {
        rep.H.push_back(unit4(m, i, i, 1, i + 1, i + 1, -1, n + i, n + i, -1,
                              n + i + 1, n + i + 1, 1));
        rep.E_plus.push_back(unit2(m, i, i + 1, 1, n + i + 1, n + i, -1));
        rep.E_minus.push_back(unit2(m, i + 1, i, 1, n + i, n + i + 1, -1));
      }
      rep.H.push_back(unit2(m, n - 1, n - 1, 2, 2 * n - 1, 2 * n - 1, -2));
      rep.E_plus.push_back(unit2(m, n - 1, 2 * n, 1, 2 * n, 2 * n - 1, -1));
      rep.E_minus.push_back(unit2(m, 2 * n, n - 1, 2, 2 * n - 1, 2 * n, -2));
      RatMatrix form = rm_zero(m);
      for (int i = 0; i < n; ++i) {
        form[i][n + i] = 1;
        form[n + i][i] = 1;
      }
      form[2 * n][2 * n] = 1;
      rep.form = form;
      rep.borel_order = concat(concat(iota_vec(0, n - 1, 1), {2 * n}),
                               iota_vec(2 * n - 1, n, -1));
      return rep;
    }
    case Family::D: {
      const int m = 2 * n;
      rep.dim = m;
      for (int i = 0; i + 1 < n; ++i) {
        rep.H.push_back(unit4(m, i, i, 1, i + 1, i + 1, -1, 2 * n - 2 - i,
                              2 * n - 2 - i, 1, 2 * n - 1 - i, 2 * n - 1 - i,
                              -1));
        rep.E_plus.push_back(
            unit2(m, i, i + 1, 1, 2 * n - 2 - i, 2 * n - 1 - i, -1));
        rep.E_minus.push_back(
            unit2(m, i + 1, i, 1, 2 * n - 1 - i, 2 * n - 2 - i, -1));
      }
      rep.H.push_back(
          unit4(m, n - 2, n - 2, 1, n - 1, n - 1, 1, n, n, -1, n + 1, n + 1, -1));
      rep.E_plus.push_back(unit2(m, n - 2, n, 1, n - 1, n + 1, -1));
      rep.E_minus.push_back(unit2(m, n, n - 2, 1, n + 1, n - 1, -1));
      RatMatrix form = rm_zero(m);
      for (int i = 0; i < m; ++i) form[i][m - 1 - i] = 1;
      rep.form = form;
      rep.borel_order = iota_vec(0, m - 1, 1);
      return rep;
    }
    case Family::G2: {
      const int m = 7;
      rep.dim = m;
      RatMatrix h1 = rm_zero(m);
      h1[0][0] = 1;
      h1[1][1] = -1;
      h1[2][2] = 2;
      h1[3][3] = -1;
      h1[4][4] = 1;
      h1[5][5] = -2;
      RatMatrix h2 = rm_zero(m);
      h2[1][1] = 1;
      h2[2][2] = -1;
      h2[4][4] = -1;
      h2[5][5] = 1;
      rep.H = {h1, h2};
      rep.E_plus = {unit4(m, 0, 1, 1, 4, 3, -1, 2, 6, 1, 6, 5, -1),
                    unit2(m, 1, 2, 1, 5, 4, -1)};
      rep.E_minus = {unit4(m, 1, 0, 1, 3, 4, -1, 6, 2, 2, 5, 6, -2),
                     unit2(m, 2, 1, 1, 4, 5, -1)};
      RatMatrix form = rm_zero(m);
      for (int i = 0; i < 3; ++i) {
        form[i][3 + i] = 1;
        form[3 + i][i] = 1;
      }
      form[6][6] = 1;
      rep.form = form;
      rep.borel_order = {0, 1, 2, 6, 5, 4, 3};
      return rep;
    }
  }
  throw std::invalid_argument("unknown algebra family");
}

WeightDiagram weight_diagram(const AlgebraSpec& spec) {
  validate(spec);
  if (spec.family == Family::D)
    throw UnsupportedError("representation branches");
  const int n = spec.rank;
  const CartanMatrix a = cartan_matrix(spec);
  std::vector<int> edges;
  switch (spec.family) {
    case Family::A:
      edges = iota_vec(0, n - 1, 1);
      break;
    case Family::B:
      edges = concat(concat(iota_vec(0, n - 1, 1), {n - 1}),
                     iota_vec(n - 2, 0, -1));
      break;
    case Family::C:
      edges = concat(iota_vec(0, n - 1, 1), iota_vec(n - 2, 0, -1));
      break;
    case Family::G2:
      edges = {0, 1, 0, 0, 1, 0};
      break;
    case Family::D:
      break;
  }
  WeightDiagram diagram;
  std::vector<int> top(n, 0);
  top[0] = 1;
  diagram.weights.push_back(top);
  for (int e : edges) {
    std::vector<int> next = diagram.weights.back();
    for (int j = 0; j < n; ++j) next[j] -= a[e][j];
    diagram.weights.push_back(std::move(next));
  }
  diagram.edges = std::move(edges);
  return diagram;
}

int GradedBasis::dim() const {
  int total = 0;
  for (const auto& [g, elems] : by_grade)
    total += static_cast<int>(elems.size());
  return total;
}

GradedBasis graded_basis(const AlgebraSpec& spec) {
  const MatrixRep rep = first_fundamental_rep(spec);
  GradedBasis basis;
  basis.by_grade[0] = rep.H;
  basis.by_grade[1] = rep.E_plus;
  basis.by_grade[-1] = rep.E_minus;
  int k = 1;
  for (;;) {
    for (int sign : {1, -1}) {
      const int g = sign * (k + 1);
      const auto& gens = sign > 0 ? rep.E_plus : rep.E_minus;
      const auto prev_it = basis.by_grade.find(sign * k);
      if (prev_it == basis.by_grade.end()) continue;
      const auto& prev = prev_it->second;
      std::vector<RatMatrix> cur;
      std::vector<RatVector> cur_vecs;
      for (const auto& gen : gens) {
        for (const auto& x : prev) {
          RatMatrix c = rm_bracket(gen, x);
          if (rm_is_zero(c)) continue;
          cur_vecs.push_back(rm_vec(c));
          if (exact_rank(cur_vecs) > static_cast<int>(cur.size())) {
            cur.push_back(std::move(c));
          } else {
            cur_vecs.pop_back();
          }
        }
      }
      if (!cur.empty()) basis.by_grade[g] = std::move(cur);
    }
    if (!basis.by_grade.count(k + 1)) break;
    ++k;
  }
  basis.top_grade = k;
  return basis;
}

std::string slice_style_name(SliceStyle style) {
  return style == SliceStyle::canonical ? "canonical" : "reference_d4";
}

SliceStyle slice_style_parse(const std::string& text) {
  if (text == "canonical") return SliceStyle::canonical;
  if (text == "reference" || text == "reference_d4")
    return SliceStyle::reference_d4;
  throw std::invalid_argument("unknown slice style: " + text);
}

RatMatrix epsilon_matrix(const MatrixRep& rep) {
  RatMatrix eps = rm_zero(rep.dim);
  for (const auto& e : rep.E_minus) eps = rm_add(eps, e);
  return eps;
}

SliceBasis kostant_slice(const AlgebraSpec& spec, SliceStyle style) {
  validate(spec);
  SliceBasis out;
  out.spec = spec;
  out.style = style;
  if (style == SliceStyle::reference_d4) {
    if (!(spec.family == Family::D && spec.rank == 4))
      throw UnsupportedError("reference slice defined only for D4");
    const int m = 8;
    // Antisymmetric pair relative to the anti-diagonal: E_{i,j} - E_{9-j,9-i}
    // with 1-based row/column labels.
    auto f = [m](int i, int j) {
      return unit2(m, i - 1, j - 1, 1, 8 - j, 8 - i, -1);
    };
    out.elems = {{1, f(3, 5), "F35"},
                 {3, f(1, 5), "F15"},
                 {3, f(2, 6), "F26"},
                 {5, f(1, 7), "F17"}};
    return out;
  }
  const MatrixRep rep = first_fundamental_rep(spec);
  const GradedBasis basis = graded_basis(spec);
  const RatMatrix eps = epsilon_matrix(rep);
  for (int k = 1; k <= basis.top_grade; ++k) {
    const auto& gk = basis.by_grade.at(k);
    const int d = static_cast<int>(gk.size());
    std::vector<RatVector> gk_vecs;
    gk_vecs.reserve(gk.size());
    for (const auto& x : gk) gk_vecs.push_back(rm_vec(x));
    std::vector<RatVector> coords;
    auto above = basis.by_grade.find(k + 1);
    if (above != basis.by_grade.end()) {
      for (const auto& x : above->second) {
        auto c = solve_columns(gk_vecs, rm_vec(rm_bracket(eps, x)));
        if (!c) throw std::runtime_error("graded image decomposition failed");
        coords.push_back(*c);
      }
    }
    // Pivot over the reversed coordinate order so the complement keeps the
    // earliest-constructed basis elements.
    std::vector<RatVector> rows(d, RatVector(coords.size(), Rat(0)));
    for (int j = 0; j < d; ++j)
      for (std::size_t t = 0; t < coords.size(); ++t)
        rows[j][t] = coords[t][d - 1 - j];
    const std::set<int> pivs = pivot_rows(rows);
    std::vector<int> complement;
    for (int j = 0; j < d; ++j)
      if (!pivs.count(j)) complement.push_back(d - 1 - j);
    std::sort(complement.begin(), complement.end());
    for (int j : complement)
      out.elems.push_back(
          {k, gk[j], "g" + std::to_string(k) + "b" + std::to_string(j)});
  }
  return out;
}

ConnectionParts connection_parts(const AlgebraSpec& spec) {
  const MatrixRep rep = first_fundamental_rep(spec);
  const int n = spec.rank;
  const int m = rep.dim;
  ConnectionParts parts;
  parts.u = PolyMatrix(m, n);
  parts.Y = PolyMatrix(m, n);
  parts.epsilon = epsilon_matrix(rep);
  for (int i = 0; i < n; ++i) {
    const DiffPoly ui = DiffPoly::jet(n, i, 1);
    const DiffPoly ei = DiffPoly::exponential(n, i);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (rep.H[i][a][b] != 0)
          parts.u.at(a, b) += rep.H[i][a][b] * ui;
        if (rep.E_plus[i][a][b] != 0)
          parts.Y.at(a, b) += rep.E_plus[i][a][b] * ei;
      }
  }
  return parts;
}

}  // namespace toda
