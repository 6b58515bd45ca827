#include "toda/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "toda/serialize.hpp"

namespace toda {

namespace {

constexpr std::size_t kMaxWitnesses = 3;

void add_witness(CheckReport& report, const std::string& text) {
  if (report.first_failing_monomials.size() < kMaxWitnesses)
    report.first_failing_monomials.push_back(text);
}

void merge_into(CheckReport& total, const CheckReport& part) {
  total.ok = total.ok && part.ok;
  total.residual_terms += part.residual_terms;
  for (const auto& w : part.first_failing_monomials) add_witness(total, w);
}

}  // namespace

bool is_characteristic_integral(const DiffPoly& I, const AlgebraSpec& spec) {
  return d_y_toda(I, cartan_matrix(spec)).is_zero();
}

CheckReport check_characteristic_integral(const DiffPoly& I,
                                          const AlgebraSpec& spec,
                                          const std::string& label) {
  const DiffPoly image = d_y_toda(I, cartan_matrix(spec));
  CheckReport report;
  report.ok = image.is_zero();
  report.residual_terms = static_cast<long>(image.term_count());
  if (!report.ok) {
    const Naming naming = naming_for(spec);
    const std::string prefix = label.empty() ? "" : label + ": ";
    for (const auto& [m, c] : image.terms()) {
      if (report.first_failing_monomials.size() >= kMaxWitnesses) break;
      add_witness(report, prefix + monomial_text(m, naming));
    }
  }
  return report;
}

CheckReport check_integral_set(const IntegralSet& set) {
  CheckReport total;
  for (const auto& entry : set.integrals)
    merge_into(total,
               check_characteristic_integral(entry.poly, set.spec, entry.label));
  for (const auto& entry : set.residuals)
    merge_into(total,
               check_characteristic_integral(entry.poly, set.spec, entry.label));
  return total;
}

PolyMatrix zero_curvature_residual(const AlgebraSpec& spec) {
  const ConnectionParts parts = connection_parts(spec);
  const CartanMatrix cartan = cartan_matrix(spec);
  const int n = spec.rank;
  const PolyMatrix eu =
      PolyMatrix::from_rational(parts.epsilon, n) + parts.u;
  const PolyMatrix commutator = eu * parts.Y - parts.Y * eu;
  return commutator - pm_dx(parts.Y, &cartan) - pm_dy(parts.u, cartan);
}

CheckReport check_zero_curvature(const AlgebraSpec& spec) {
  const PolyMatrix residual = zero_curvature_residual(spec);
  CheckReport report;
  const Naming naming = naming_for(spec);
  for (int i = 0; i < residual.dim(); ++i)
    for (int j = 0; j < residual.dim(); ++j) {
      const DiffPoly& entry = residual.at(i, j);
      if (entry.is_zero()) continue;
      report.ok = false;
      report.residual_terms += static_cast<long>(entry.term_count());
      for (const auto& [m, c] : entry.terms()) {
        if (report.first_failing_monomials.size() >= kMaxWitnesses) break;
        add_witness(report, "entry(" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "): " +
                                monomial_text(m, naming));
      }
    }
  return report;
}

std::vector<int> degree_list(const AlgebraSpec& spec) {
  validate(spec);
  const int n = spec.rank;
  std::vector<int> degrees;
  switch (spec.family) {
    case Family::A:
      for (int j = 2; j <= n + 1; ++j) degrees.push_back(j);
      break;
    case Family::B:
    case Family::C:
      for (int j = 1; j <= n; ++j) degrees.push_back(2 * j);
      break;
    case Family::D:
      for (int j = 1; j <= n - 1; ++j) degrees.push_back(2 * j);
      degrees.push_back(n);
      std::sort(degrees.begin(), degrees.end());
      break;
    case Family::G2:
      degrees = {2, 6};
      break;
  }
  return degrees;
}

bool degree_audit(const IntegralSet& set, const AlgebraSpec& spec) {
  return check_degrees(set, spec).ok;
}

CheckReport check_degrees(const IntegralSet& set, const AlgebraSpec& spec) {
  CheckReport report;
  std::vector<int> declared;
  for (const auto& entry : set.integrals) {
    declared.push_back(entry.degree);
    if (entry.poly.is_zero()) {
      report.ok = false;
      report.residual_terms += 1;
      add_witness(report, entry.label + ": zero polynomial");
      continue;
    }
    int actual = 0;
    if (!entry.poly.homogeneous(&actual)) {
      report.ok = false;
      report.residual_terms += 1;
      add_witness(report, entry.label + ": not homogeneous");
      continue;
    }
    if (actual != entry.degree) {
      report.ok = false;
      report.residual_terms += 1;
      add_witness(report, entry.label + ": degree " + std::to_string(actual) +
                              " != declared " + std::to_string(entry.degree));
    }
  }
  std::vector<int> expected = degree_list(spec);
  std::sort(declared.begin(), declared.end());
  if (declared != expected) {
    report.ok = false;
    report.residual_terms += 1;
    add_witness(report, "degree multiset differs from the algebra's list");
  }
  return report;
}

}  // namespace toda
