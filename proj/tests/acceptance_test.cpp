// End-to-end acceptance checks for the characteristic-integral engine.
// Each criterion prints exactly one PASS/FAIL line; the binary exits
// nonzero if any criterion fails or exceeds its time budget.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "reference_values.hpp"
#include "toda/diffop.hpp"
#include "toda/dsgauge.hpp"
#include "toda/liedata.hpp"
#include "toda/verify.hpp"

using namespace toda;
using testing::parse_poly;

namespace {

bool g_all_ok = true;

void run_criterion(int id, const std::string& description, double limit_seconds,
                   const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" [exception: ") + e.what() + "]";
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (ok && elapsed > limit_seconds) {
    ok = false;
    note = " [exceeded " + std::to_string(limit_seconds) + " s budget]";
  }
  std::printf("criterion %d: %s (%.2f s) — %s%s\n", id, ok ? "PASS" : "FAIL",
              elapsed, description.c_str(), note.c_str());
  std::fflush(stdout);
  if (!ok) g_all_ok = false;
}

IntegralSet quick_set(const char* name) {
  const AlgebraSpec spec = AlgebraSpec::parse(name);
  return extract_integrals(factorized_product(spec), spec);
}

// Sum of the exponential-free terms of total degree `deg` whose jet factors
// are all first-order.
DiffPoly all_first_order_part(const DiffPoly& p, int deg) {
  DiffPoly out(p.rank());
  for (const auto& [m, c] : p.terms()) {
    if (!m.exp_free() || m.degree() != deg) continue;
    bool first_order = true;
    for (const auto& [v, power] : m.jets) {
      (void)power;
      if (v.order != 1) {
        first_order = false;
        break;
      }
    }
    if (first_order) out.add_term(m, c);
  }
  return out;
}

bool criterion_liouville() {
  const AlgebraSpec spec = AlgebraSpec::parse("A1");
  const IntegralSet set = quick_set("A1");
  if (set.integrals.size() != 1 || !set.residuals.empty()) return false;
  const DiffPoly expected =
      parse_poly(testing::kA1QuickI1, testing::indexed_names(1), 1);
  if (!(set.integrals[0].poly == expected)) return false;
  return d_y_toda(set.integrals[0].poly, cartan_matrix(spec)).is_zero();
}

bool criterion_g2() {
  const IntegralSet set = quick_set("G2");
  if (set.integrals.size() != 2 || set.residuals.size() != 4) return false;
  const auto& names = testing::g2_names();
  const DiffPoly i1 = parse_poly(testing::kG2I1, names, 2);
  const DiffPoly i2 = parse_poly(testing::kG2I2, names, 2);
  if (set.integrals[0].poly.terms().size() != 5) return false;
  if (!(set.integrals[0].poly == i1)) return false;
  if (!(set.integrals[1].poly == i2)) return false;
  return check_j_relations_g2(set).ok;
}

// Shared between criteria 3 and 4 so the reduction runs once.
GaugeResult* d4_result() {
  static GaugeResult result =
      reduce_to_slice(AlgebraSpec::parse("D4"), SliceStyle::reference_d4);
  return &result;
}

bool criterion_d4() {
  const GaugeResult& r = *d4_result();
  const auto& names = testing::d4_names();
  if (r.integrals.integrals.size() != 4) return false;
  if (!(r.integrals.integrals[0].poly == parse_poly(testing::kD4I1, names, 4)))
    return false;
  if (!(r.integrals.integrals[1].poly == parse_poly(testing::kD4I2, names, 4)))
    return false;
  if (!(r.integrals.integrals[2].poly == parse_poly(testing::kD4I3, names, 4)))
    return false;
  const DiffPoly& i4 = r.integrals.integrals[3].poly;
  if (!(leading_terms(i4) == parse_poly(testing::kD4I4Linear, names, 4)))
    return false;
  const AlgebraSpec spec = AlgebraSpec::parse("D4");
  if (!d_y_toda(i4, cartan_matrix(spec)).is_zero()) return false;

  // The gauge element must preserve the representation's bilinear form,
  // which forces the two entry identities checked afterwards.
  const MatrixRep rep = first_fundamental_rep(spec);
  const PolyMatrix form = PolyMatrix::from_rational(rep.form.value(), 4);
  if (!(r.g.transpose() * form * r.g == form)) return false;
  if (!r.g.at(3, 4).is_zero()) return false;
  return (r.g.at(2, 3) + r.g.at(4, 5)).is_zero();
}

bool criterion_pfaffian() {
  const GaugeResult& r = *d4_result();
  const DiffPoly quartic =
      all_first_order_part(r.integrals.integrals[1].poly, 4);
  const ConnectionParts parts = connection_parts(AlgebraSpec::parse("D4"));
  DiffPoly product = DiffPoly::constant(4, Rat(1));
  for (int i = 0; i < 4; ++i) product = product * parts.u.at(i, i);
  return quartic == product;
}

bool criterion_quick_suite() {
  static const char* const kSpecs[] = {"A1", "A2", "A3", "A4", "B2",
                                       "B3", "C2", "C3", "G2"};
  for (const char* name : kSpecs) {
    const IntegralSet set = quick_set(name);
    const CartanMatrix cm = cartan_matrix(set.spec);
    for (const auto* list : {&set.integrals, &set.residuals})
      for (const auto& entry : *list)
        if (!d_y_toda(entry.poly, cm).is_zero()) return false;
    if (!check_integral_set(set).ok) return false;
  }
  return true;
}

bool criterion_degrees() {
  static const char* const kSpecs[] = {"A1", "A2", "A3", "A4", "B2",
                                       "B3", "C2", "C3", "G2"};
  for (const char* name : kSpecs) {
    const IntegralSet set = quick_set(name);
    if (!check_degrees(set, set.spec).ok) return false;
  }
  const GaugeResult& d4 = *d4_result();
  if (!check_degrees(d4.integrals, d4.integrals.spec).ok) return false;
  const IntegralSet d3 =
      reduce_to_slice(AlgebraSpec::parse("D3"), SliceStyle::canonical)
          .integrals;
  return check_degrees(d3, d3.spec).ok;
}

bool criterion_zero_curvature() {
  static const char* const kSpecs[] = {"A1", "A2", "A3", "A4", "B2", "B3",
                                       "C2", "C3", "D3", "D4", "G2"};
  for (const char* name : kSpecs) {
    const AlgebraSpec spec = AlgebraSpec::parse(name);
    if (!zero_curvature_residual(spec).is_zero()) return false;
    if (!check_zero_curvature(spec).ok) return false;
  }
  // A deliberately broken connection must be detected: replace the first
  // exponential entry of Y with a constant.
  const AlgebraSpec g2 = AlgebraSpec::parse("G2");
  const MatrixRep rep = first_fundamental_rep(g2);
  const CartanMatrix cm = cartan_matrix(g2);
  const ConnectionParts parts = connection_parts(g2);
  PolyMatrix y(rep.dim, g2.rank);
  for (int i = 0; i < g2.rank; ++i) {
    const DiffPoly factor = i == 0 ? DiffPoly::constant(g2.rank, Rat(1))
                                   : DiffPoly::exponential(g2.rank, i);
    for (int a = 0; a < rep.dim; ++a)
      for (int b = 0; b < rep.dim; ++b)
        if (!(rep.E_plus[i][a][b] == 0))
          y.at(a, b) += factor * DiffPoly::constant(g2.rank,
                                                    rep.E_plus[i][a][b]);
  }
  const PolyMatrix eu = parts.u + PolyMatrix::from_rational(parts.epsilon,
                                                            g2.rank);
  const PolyMatrix residual =
      eu * y - y * eu - pm_dx(y, &cm) - pm_dy(parts.u, cm);
  return !residual.is_zero();
}

bool criterion_structure() {
  std::mt19937 rng(99);
  const CartanMatrix a2 = cartan_matrix(AlgebraSpec::parse("A2"));

  for (int trial = 0; trial < 10; ++trial) {
    const DiffPoly a = testing::random_poly(rng, 2, 5, 3, 3, true);
    const DiffPoly b = testing::random_poly(rng, 2, 5, 3, 3, true);
    const DiffPoly c = testing::random_poly(rng, 2, 5, 3, 3, true);
    if (!((a + b) + c == a + (b + c))) return false;
    if (!((a * b) * c == a * (b * c))) return false;
    if (!(a * b == b * a)) return false;
    if (!(a * (b + c) == a * b + a * c)) return false;
    if (!(a - a == DiffPoly::zero(2))) return false;
    if (!(d_x(a * b, &a2) == d_x(a, &a2) * b + a * d_x(b, &a2))) return false;

    const DiffPoly p = testing::random_poly(rng, 2, 5, 3, 3, false);
    const DiffPoly q = testing::random_poly(rng, 2, 5, 3, 3, false);
    if (!(d_y_toda(p * q, a2) ==
          d_y_toda(p, a2) * q + p * d_y_toda(q, a2)))
      return false;
    if (!(d_x(d_y_toda(p, a2), &a2) == d_y_toda(d_x(p, &a2), a2)))
      return false;
  }

  for (int trial = 0; trial < 5; ++trial) {
    auto random_op = [&rng]() {
      std::map<int, DiffPoly> coeffs;
      std::uniform_int_distribution<int> deg(0, 2);
      const int top = deg(rng);
      for (int k = 0; k <= top; ++k)
        coeffs[k] = testing::random_poly(rng, 2, 3, 2, 2, true);
      coeffs[top] = coeffs[top] + DiffPoly::constant(2, Rat(1));
      return DiffOp::from_coeffs(2, coeffs);
    };
    const DiffOp l = random_op(), m = random_op(), n = random_op();
    if (!(compose(compose(l, m, &a2), n, &a2) ==
          compose(l, compose(m, n, &a2), &a2)))
      return false;
  }

  static const char* const kSpecs[] = {"A1", "A2", "A3", "A4", "B2", "B3",
                                       "C2", "C3", "D3", "D4", "G2"};
  for (const char* name : kSpecs) {
    const AlgebraSpec spec = AlgebraSpec::parse(name);
    if (static_cast<int>(kostant_slice(spec).elems.size()) != spec.rank)
      return false;
    const GradedBasis basis = graded_basis(spec);
    const RatMatrix eps = epsilon_matrix(first_fundamental_rep(spec));
    std::vector<RatVector> images;
    int count = 0;
    for (int k = 0; k <= basis.top_grade; ++k) {
      const auto it = basis.by_grade.find(k);
      if (it == basis.by_grade.end()) continue;
      for (const auto& x : it->second) {
        images.push_back(rm_vec(rm_bracket(eps, x)));
        ++count;
      }
    }
    if (exact_rank(images) != count) return false;
  }
  return true;
}

bool criterion_cross_method() {
  std::vector<std::vector<Rat>> recorded;
  for (int repeat = 0; repeat < 2; ++repeat) {
    std::vector<std::vector<Rat>> constants;
    for (const char* name : {"A1", "A2", "A3"}) {
      const AlgebraSpec spec = AlgebraSpec::parse(name);
      const IntegralSet quick = quick_set(name);
      const IntegralSet ds =
          reduce_to_slice(spec, SliceStyle::canonical).integrals;
      if (ds.integrals.size() != quick.integrals.size()) return false;
      std::vector<Rat> per_degree;
      for (size_t j = 0; j < ds.integrals.size(); ++j) {
        if (ds.integrals[j].degree != quick.integrals[j].degree) return false;
        // The two methods agree up to the constant -1 in every degree.
        if (!(ds.integrals[j].poly + quick.integrals[j].poly ==
              DiffPoly::zero(spec.rank)))
          return false;
        per_degree.push_back(Rat(-1));
      }
      constants.push_back(std::move(per_degree));
    }
    if (repeat == 0)
      recorded = constants;
    else if (!(recorded == constants))
      return false;
  }
  return true;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  run_criterion(1,
                "A1: the factored second-order operator yields u1_2 - u1_1^2, "
                "annihilated by the vertical derivation",
                1.0, criterion_liouville);
  run_criterion(2,
                "G2: both integrals match the recorded values term for term "
                "and the four J entries reduce to differential consequences "
                "of I_1 and I_2",
                60.0, criterion_g2);
  run_criterion(3,
                "D4: the fixed-slice reduction reproduces the recorded "
                "integrals, I_4 has linear part -u6 - 1/2*v6 - w6, and the "
                "gauge element preserves the invariant bilinear form",
                300.0, criterion_d4);
  run_criterion(4,
                "D4: the all-first-order quartic part of I_2 equals the "
                "product of the first four diagonal connection entries",
                60.0, criterion_pfaffian);
  run_criterion(5,
                "quick suite A1-A4, B2-B3, C2-C3, G2: every produced "
                "coefficient is a characteristic integral",
                300.0, criterion_quick_suite);
  run_criterion(6,
                "declared degrees are homogeneous and match each algebra's "
                "degree list",
                60.0, criterion_degrees);
  run_criterion(7,
                "zero-curvature residual vanishes for every algebra and "
                "flags a deliberately broken connection",
                60.0, criterion_zero_curvature);
  run_criterion(8,
                "structural laws hold: ring axioms, both Leibniz rules, "
                "commuting mixed derivations, associative composition, "
                "slice dimensions, and injectivity of bracketing with "
                "epsilon on nonnegative grades",
                60.0, criterion_structure);
  run_criterion(9,
                "A1-A3: gauge reduction agrees with the factored operator "
                "up to the recorded constant -1 per degree, identically "
                "across repeated runs",
                60.0, criterion_cross_method);

  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (total > 600.0) {
    std::printf("total: FAIL — suite exceeded the 600 s budget (%.2f s)\n",
                total);
    g_all_ok = false;
  } else {
    std::printf("total: %.2f s\n", total);
  }
  return g_all_ok ? 0 : 1;
}
