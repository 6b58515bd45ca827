#include "toda/serialize.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace toda {

namespace {

std::string field_name(const Naming& naming, int field) {
  if (field >= 0 && field < static_cast<int>(naming.fields.size()))
    return naming.fields[field];
  return "u" + std::to_string(field + 1);
}

// LaTeX subscript/superscript argument: single digits go bare, anything
// longer gets braces.
std::string latex_script(int value) {
  const std::string text = std::to_string(value);
  return text.size() == 1 ? text : "{" + text + "}";
}

std::string latex_number(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return "\\tfrac{" + value.get_num().get_str() + "}{" +
         value.get_den().get_str() + "}";
}

std::string monomial_latex(const Monomial& m, const Naming& naming) {
  std::string out;
  for (const auto& [v, power] : m.jets) {
    std::string base;
    if (naming.compact) {
      base = field_name(naming, v.field) + "_" + latex_script(v.order);
    } else {
      base = "u^{" + std::to_string(v.field + 1) + "}_{" +
             std::to_string(v.order) + "}";
    }
    if (power > 1)
      out += "{" + base + "}^" + latex_script(power);
    else
      out += base;
  }
  bool any_exp = false;
  std::string arg;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (any_exp) arg += "+";
    if (m.exp[i] != 1) arg += std::to_string(m.exp[i]);
    arg += "\\rho_" + latex_script(static_cast<int>(i) + 1);
    any_exp = true;
  }
  if (any_exp) out += "e^{" + arg + "}";
  return out;
}

}  // namespace

Naming naming_for(const AlgebraSpec& spec) {
  if (spec.family == Family::G2) return {{"u", "v"}, true};
  if (spec.family == Family::D && spec.rank == 4)
    return {{"u", "v", "w", "z"}, true};
  std::vector<std::string> fields;
  fields.reserve(spec.rank);
  for (int i = 1; i <= spec.rank; ++i)
    fields.push_back("u" + std::to_string(i));
  return {std::move(fields), false};
}

std::string monomial_text(const Monomial& m, const Naming& naming) {
  std::vector<std::string> factors;
  for (const auto& [v, power] : m.jets) {
    std::string jet = naming.compact
                          ? field_name(naming, v.field) + std::to_string(v.order)
                          : field_name(naming, v.field) + "_" +
                                std::to_string(v.order);
    if (power > 1) jet += "^" + std::to_string(power);
    factors.push_back(std::move(jet));
  }
  bool any_exp = false;
  std::string arg;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (any_exp) arg += "+";
    if (m.exp[i] != 1) arg += std::to_string(m.exp[i]) + "*";
    arg += "rho" + std::to_string(i + 1);
    any_exp = true;
  }
  if (any_exp) factors.push_back("exp(" + arg + ")");
  if (factors.empty()) return "1";
  std::string out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
  return out;
}

std::string to_text(const DiffPoly& p, const Naming& naming) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rat magnitude = negative ? Rat(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_text(m, naming);
    if (mono == "1")
      out += rat_to_string(magnitude);
    else if (magnitude == 1)
      out += mono;
    else
      out += rat_to_string(magnitude) + "*" + mono;
  }
  return out;
}

std::string to_latex(const DiffPoly& p, const Naming& naming) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rat magnitude = negative ? Rat(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? "-" : "+";
    }
    const std::string mono = monomial_latex(m, naming);
    if (mono.empty())
      out += latex_number(magnitude);
    else if (magnitude == 1)
      out += mono;
    else
      out += latex_number(magnitude) + "\\," + mono;
  }
  return out;
}

std::string to_text(const IntegralSet& set) {
  const Naming naming = naming_for(set.spec);
  std::string out;
  for (const auto& entry : set.integrals)
    out += entry.label + " = " + to_text(entry.poly, naming) + "\n";
  for (const auto& entry : set.residuals)
    out += entry.label + " = " + to_text(entry.poly, naming) + "\n";
  return out;
}

std::string to_latex(const IntegralSet& set) {
  const Naming naming = naming_for(set.spec);
  std::string out;
  for (const auto& entry : set.integrals)
    out += entry.label + " = " + to_latex(entry.poly, naming) + "\n";
  for (const auto& entry : set.residuals)
    out += entry.label + " = " + to_latex(entry.poly, naming) + "\n";
  return out;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson poly_value(const DiffPoly& p) {
  ojson terms = ojson::array();
  for (const auto& [m, c] : p.terms()) {
    ojson jets = ojson::array();
    for (const auto& [v, power] : m.jets)
      jets.push_back(ojson::array({v.field + 1, v.order, power}));
    ojson term;
    term["coeff"] = rat_to_string(c);
    term["jets"] = std::move(jets);
    term["exp"] = m.exp;
    terms.push_back(std::move(term));
  }
  ojson out;
  out["rank"] = p.rank();
  out["terms"] = std::move(terms);
  return out;
}

ojson ratmatrix_value(const RatMatrix& m) {
  ojson rows = ojson::array();
  for (const auto& row : m) {
    ojson cells = ojson::array();
    for (const auto& x : row) cells.push_back(rat_to_string(x));
    rows.push_back(std::move(cells));
  }
  return rows;
}

ojson polymatrix_value(const PolyMatrix& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.dim(); ++i) {
    ojson cells = ojson::array();
    for (int j = 0; j < m.dim(); ++j) cells.push_back(poly_value(m.at(i, j)));
    rows.push_back(std::move(cells));
  }
  return rows;
}

ojson integral_value(const Integral& entry) {
  ojson out;
  out["label"] = entry.label;
  out["degree"] = entry.degree;
  out["poly"] = poly_value(entry.poly);
  return out;
}

ojson integral_set_value(const IntegralSet& set) {
  ojson out;
  out["algebra"] = set.spec.str();
  out["method"] = set.method;
  out["slice"] = set.slice_description;
  ojson integrals = ojson::array();
  for (const auto& entry : set.integrals)
    integrals.push_back(integral_value(entry));
  out["integrals"] = std::move(integrals);
  ojson residuals = ojson::array();
  for (const auto& entry : set.residuals)
    residuals.push_back(integral_value(entry));
  out["residuals"] = std::move(residuals);
  return out;
}

ojson gauge_result_value(const GaugeResult& result) {
  ojson out = integral_set_value(result.integrals);
  ojson slice = ojson::array();
  for (const auto& elem : result.slice.elems) {
    ojson entry;
    entry["grade"] = elem.grade;
    entry["label"] = elem.label;
    entry["matrix"] = ratmatrix_value(elem.matrix);
    slice.push_back(std::move(entry));
  }
  out["slice_basis"] = std::move(slice);
  out["g"] = polymatrix_value(result.g);
  ojson transcript = ojson::array();
  for (const auto& step : result.transcript) {
    ojson entry;
    entry["grade"] = step.grade;
    entry["z"] = polymatrix_value(step.z);
    transcript.push_back(std::move(entry));
  }
  out["transcript"] = std::move(transcript);
  out["final_connection"] = polymatrix_value(result.final_connection);
  return out;
}

DiffPoly poly_from_value(const nlohmann::json& j) {
  if (!j.is_object())
    throw std::invalid_argument("polynomial JSON must be an object");
  const int rank = j.at("rank").get<int>();
  if (rank < 0) throw std::invalid_argument("negative rank");
  DiffPoly p(rank);
  for (const auto& term : j.at("terms")) {
    const Rat coeff = rat_from_string(term.at("coeff").get<std::string>());
    std::map<JetVar, int> jets;
    for (const auto& jet : term.at("jets")) {
      if (!jet.is_array() || jet.size() != 3)
        throw std::invalid_argument("jet entry must be [field, order, power]");
      const int field = jet[0].get<int>();
      const int order = jet[1].get<int>();
      const int power = jet[2].get<int>();
      if (field < 1 || field > rank || order < 1 || power < 1)
        throw std::invalid_argument("jet entry out of range");
      jets[JetVar{field - 1, order}] += power;
    }
    Monomial m;
    for (const auto& [v, power] : jets) m.jets.emplace_back(v, power);
    m.exp.assign(rank, 0);
    if (term.contains("exp")) {
      const auto& exp = term.at("exp");
      if (static_cast<int>(exp.size()) != rank)
        throw std::invalid_argument("exp multi-index length mismatch");
      for (int i = 0; i < rank; ++i) {
        m.exp[i] = exp[i].get<int>();
        if (m.exp[i] < 0)
          throw std::invalid_argument("negative exponential index");
      }
    }
    p.add_term(m, coeff);
  }
  return p;
}

}  // namespace

std::string to_json(const DiffPoly& p) { return poly_value(p).dump(2); }

std::string to_json(const DiffOp& op) {
  ojson coeffs = ojson::object();
  for (const auto& [power, poly] : op.coeffs())
    coeffs[std::to_string(power)] = poly_value(poly);
  ojson out;
  out["degree_coeffs"] = std::move(coeffs);
  return out.dump(2);
}

std::string to_json(const RatMatrix& m) { return ratmatrix_value(m).dump(2); }

std::string to_json(const PolyMatrix& m) { return polymatrix_value(m).dump(2); }

std::string to_json(const IntegralSet& set) {
  return integral_set_value(set).dump(2);
}

std::string to_json(const GaugeResult& result) {
  return gauge_result_value(result).dump(2);
}

std::string to_json(const CheckReport& report) {
  ojson out;
  out["ok"] = report.ok;
  out["residual_terms"] = report.residual_terms;
  out["first_failing_monomials"] = report.first_failing_monomials;
  return out.dump(2);
}

DiffPoly diffpoly_from_json(const std::string& text) {
  try {
    return poly_from_value(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

IntegralSet integral_set_from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("integrals") || !j.contains("algebra"))
      throw std::invalid_argument(
          "integral set JSON needs \"algebra\" and \"integrals\"");
    IntegralSet set;
    set.spec = AlgebraSpec::parse(j.at("algebra").get<std::string>());
    set.method = j.value("method", std::string());
    set.slice_description = j.value("slice", std::string());
    const auto read_list = [&](const char* key, std::vector<Integral>& out) {
      if (!j.contains(key)) return;
      for (const auto& item : j.at(key)) {
        Integral entry;
        entry.label = item.at("label").get<std::string>();
        entry.degree = item.at("degree").get<int>();
        entry.poly = poly_from_value(item.at("poly"));
        if (entry.poly.rank() != set.spec.rank)
          throw std::invalid_argument("rank mismatch");
        out.push_back(std::move(entry));
      }
    };
    read_list("integrals", set.integrals);
    read_list("residuals", set.residuals);
    return set;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace toda
