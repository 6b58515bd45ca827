#pragma once

#include <string>
#include <vector>

#include "toda/diffop.hpp"
#include "toda/dsgauge.hpp"
#include "toda/verify.hpp"

namespace toda {

// Field-name scheme for text/LaTeX output. Compact schemes print a jet as
// name + order ("u2"); indexed schemes as name_order ("u1_2").
struct Naming {
  std::vector<std::string> fields;
  bool compact = false;
};

// G2 uses {u, v}; D4 uses {u, v, w, z}; everything else u1..un.
Naming naming_for(const AlgebraSpec& spec);

std::string monomial_text(const Monomial& m, const Naming& naming);
// Canonical-order plain text, e.g. "u1_2 - u1_1^2" or
// "6*u2 + 2*v2 - 6*u1^2 + 6*u1*v1 - 2*v1^2".
std::string to_text(const DiffPoly& p, const Naming& naming);
// Canonical-order LaTeX with subscript jets, e.g.
// "6\,u_2+2\,v_2-6\,{u_1}^2+6\,u_1v_1-2\,{v_1}^2".
std::string to_latex(const DiffPoly& p, const Naming& naming);

// One "label = polynomial" line per integral, then per residual.
std::string to_text(const IntegralSet& set);
std::string to_latex(const IntegralSet& set);

// Deterministic JSON (2-space indent, fixed key order, canonical term
// order, rationals as "p/q" strings, 1-based field indices).
std::string to_json(const DiffPoly& p);
std::string to_json(const DiffOp& op);
std::string to_json(const RatMatrix& m);
std::string to_json(const PolyMatrix& m);
std::string to_json(const IntegralSet& set);
std::string to_json(const GaugeResult& result);
std::string to_json(const CheckReport& report);

// Inverses for the value types the CLI reads back. Both throw
// std::invalid_argument on malformed input. integral_set_from_json also
// accepts a serialized GaugeResult (it reads its "integrals" object).
DiffPoly diffpoly_from_json(const std::string& text);
IntegralSet integral_set_from_json(const std::string& text);

}  // namespace toda
