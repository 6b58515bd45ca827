#include "toda/diffop.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "toda/errors.hpp"

namespace toda {

DiffOp::DiffOp(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
}

DiffOp DiffOp::derivative(int rank) {
  DiffOp op(rank);
  op.coeffs_[1] = DiffPoly::constant(rank, Rat(1));
  return op;
}

DiffOp DiffOp::from_coeffs(int rank, std::map<int, DiffPoly> coeffs) {
  DiffOp op(rank);
  for (auto& [power, poly] : coeffs) {
    if (power < 0) throw std::invalid_argument("negative derivative power");
    if (poly.rank() != rank) throw std::invalid_argument("rank mismatch");
    if (!poly.is_zero()) op.coeffs_.emplace(power, std::move(poly));
  }
  return op;
}

int DiffOp::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

DiffPoly DiffOp::coeff(int power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? DiffPoly(rank_) : it->second;
}

void DiffOp::set_coeff(int power, const DiffPoly& p) {
  if (power < 0) throw std::invalid_argument("negative derivative power");
  if (p.rank() != rank_) throw std::invalid_argument("rank mismatch");
  if (p.is_zero())
    coeffs_.erase(power);
  else
    coeffs_[power] = p;
}

DiffOp compose(const DiffOp& L, const DiffOp& M, const CartanMatrix* cartan) {
  if (L.rank() != M.rank()) throw std::invalid_argument("rank mismatch");
  const int n = L.rank();
  std::map<int, DiffPoly> acc;
  for (const auto& [d, p] : L.coeffs()) {
    for (const auto& [e, q] : M.coeffs()) {
      DiffPoly qk = q;
      Rat binom(1);
      for (int j = 0; j <= d; ++j) {
        const int target = d - j + e;
        auto it = acc.find(target);
        if (it == acc.end()) it = acc.emplace(target, DiffPoly(n)).first;
        it->second += p * (binom * qk);
        if (j < d) {
          qk = d_x(qk, cartan);
          // mpq_class(num, den) skips canonicalization; multiply and divide
          // separately so binom stays in lowest terms.
          binom *= d - j;
          binom /= j + 1;
        }
      }
    }
  }
  return DiffOp::from_coeffs(n, std::move(acc));
}

DiffOp factorized_product(const AlgebraSpec& spec) {
  const WeightDiagram diagram = weight_diagram(spec);
  const CartanMatrix a = cartan_matrix(spec);
  const int n = spec.rank;
  DiffOp product = DiffOp::from_coeffs(n, {{0, DiffPoly::constant(n, Rat(1))}});
  for (const auto& w : diagram.weights) {
    DiffPoly beta(n);
    for (int j = 0; j < n; ++j)
      if (w[j] != 0) beta += Rat(w[j]) * DiffPoly::jet(n, j, 1);
    DiffOp factor = DiffOp::from_coeffs(
        n, {{1, DiffPoly::constant(n, Rat(1))}, {0, -beta}});
    product = compose(product, factor, &a);
  }
  return product;
}

IntegralSet extract_integrals(const DiffOp& L, const AlgebraSpec& spec) {
  validate(spec);
  if (spec.family == Family::D)
    throw UnsupportedError("representation branches");
  const int n = spec.rank;
  int m = 0;
  switch (spec.family) {
    case Family::A:
      m = n + 1;
      break;
    case Family::B:
      m = 2 * n + 1;
      break;
    case Family::C:
      m = 2 * n;
      break;
    case Family::G2:
      m = 7;
      break;
    case Family::D:
      break;
  }
  if (L.rank() != n) throw std::invalid_argument("rank mismatch");
  if (L.degree() != m || L.coeff(m) != DiffPoly::constant(n, Rat(1)) ||
      !L.coeff(m - 1).is_zero())
    throw std::runtime_error("operator not monic of expected degree");

  std::vector<std::pair<std::string, int>> primary;   // (label, power)
  std::vector<std::pair<std::string, int>> residual;  // (label, power)
  switch (spec.family) {
    case Family::A:
      for (int j = 1; j <= n; ++j)
        primary.emplace_back("I_" + std::to_string(j), n - j);
      break;
    case Family::C:
      for (int j = 1; j <= n; ++j)
        primary.emplace_back("I_" + std::to_string(j), 2 * n - 2 * j);
      for (int j = 1; j <= n - 1; ++j)
        residual.emplace_back("J_" + std::to_string(j), 2 * n - 2 * j - 1);
      break;
    case Family::B:
      for (int j = 1; j <= n; ++j)
        primary.emplace_back("I_" + std::to_string(j), 2 * n - 2 * j + 1);
      for (int j = 1; j <= n; ++j)
        residual.emplace_back("J_" + std::to_string(j), 2 * n - 2 * j);
      break;
    case Family::G2:
      primary = {{"I_1", 5}, {"I_2", 1}};
      residual = {{"J_1", 4}, {"J_2", 3}, {"J_3", 2}, {"J_4", 0}};
      break;
    case Family::D:
      break;
  }

  std::set<int> covered{m, m - 1};
  IntegralSet set;
  set.spec = spec;
  set.method = "quick";
  for (const auto& [label, power] : primary) {
    covered.insert(power);
    set.integrals.push_back({label, m - power, L.coeff(power)});
  }
  for (const auto& [label, power] : residual) {
    covered.insert(power);
    set.residuals.push_back({label, m - power, L.coeff(power)});
  }
  for (const auto& [power, poly] : L.coeffs())
    if (!covered.count(power))
      throw std::runtime_error("operator shape inconsistent with " +
                               spec.str());
  return set;
}

namespace {

const DiffPoly& find_labeled(const std::vector<Integral>& list,
                             const std::string& label) {
  for (const auto& entry : list)
    if (entry.label == label) return entry.poly;
  throw std::invalid_argument("integral set missing entry " + label);
}

}  // namespace

JRelationReport check_j_relations_g2(const IntegralSet& set) {
  if (!(set.spec.family == Family::G2 && set.spec.rank == 2))
    throw UnsupportedError("J relations defined only for G2");
  const DiffPoly& i1 = find_labeled(set.integrals, "I_1");
  const DiffPoly& i2 = find_labeled(set.integrals, "I_2");
  auto dx = [](const DiffPoly& p, int k) { return d_x_iter(p, k); };

  std::vector<std::pair<std::string, DiffPoly>> expected;
  expected.emplace_back("J_1", Rat(5, 2) * dx(i1, 1));
  expected.emplace_back("J_2", Rat(3) * dx(i1, 2) + Rat(1, 4) * (i1 * i1));
  expected.emplace_back("J_3",
                        Rat(2) * dx(i1, 3) + Rat(3, 4) * (i1 * dx(i1, 1)));
  expected.emplace_back("J_4", Rat(1, 2) * dx(i2, 1) -
                                   Rat(1, 4) * dx(i1, 5) -
                                   Rat(3, 8) * (dx(i1, 1) * dx(i1, 2)) -
                                   Rat(1, 8) * (i1 * dx(i1, 3)));

  JRelationReport report;
  for (const auto& [label, rhs] : expected) {
    const DiffPoly diff = find_labeled(set.residuals, label) - rhs;
    if (!diff.is_zero()) {
      report.ok = false;
      report.failures.emplace_back(label, diff);
    }
  }
  return report;
}

}  // namespace toda
