#include "toda/diffpoly.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>
#include <string>

namespace toda {

Rat rat_from_string(const std::string& text) {
  static const std::regex shape(R"(^-?[0-9]+(/[1-9][0-9]*)?$)");
  if (!std::regex_match(text, shape))
    throw std::invalid_argument("malformed rational: " + text);
  Rat r(text, 10);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, p] : jets) d += v.order * p;
  return d;
}

int Monomial::algebraic_degree() const {
  int d = 0;
  for (const auto& [v, p] : jets) d += p;
  return d;
}

bool Monomial::exp_free() const {
  return std::all_of(exp.begin(), exp.end(), [](int m) { return m == 0; });
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const int aa = a.algebraic_degree(), ab = b.algebraic_degree();
  if (aa != ab) return aa < ab;
  std::size_t i = 0;
  for (; i < a.jets.size() && i < b.jets.size(); ++i) {
    const auto& [va, pa] = a.jets[i];
    const auto& [vb, pb] = b.jets[i];
    if (!(va == vb)) return va < vb;
    if (pa != pb) return pa > pb;
  }
  if (a.jets.size() != b.jets.size()) return a.jets.size() < b.jets.size();
  return a.exp < b.exp;
}

namespace {

using Jets = std::vector<std::pair<JetVar, int>>;

// Sorted-merge update of one jet power; drops the symbol when the power
// cancels to zero.
Jets jets_with_delta(const Jets& jets, JetVar v, int delta) {
  Jets out;
  out.reserve(jets.size() + 1);
  bool placed = false;
  for (const auto& entry : jets) {
    if (!placed && (v < entry.first || v == entry.first)) {
      int p = (v == entry.first) ? entry.second + delta : delta;
      if (p != 0) out.emplace_back(v, p);
      if (!(v == entry.first)) out.push_back(entry);
      placed = true;
      continue;
    }
    out.push_back(entry);
  }
  if (!placed && delta != 0) out.emplace_back(v, delta);
  return out;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.jets.reserve(a.jets.size() + b.jets.size());
  std::size_t i = 0, j = 0;
  while (i < a.jets.size() && j < b.jets.size()) {
    if (a.jets[i].first == b.jets[j].first) {
      out.jets.emplace_back(a.jets[i].first,
                            a.jets[i].second + b.jets[j].second);
      ++i;
      ++j;
    } else if (a.jets[i].first < b.jets[j].first) {
      out.jets.push_back(a.jets[i++]);
    } else {
      out.jets.push_back(b.jets[j++]);
    }
  }
  for (; i < a.jets.size(); ++i) out.jets.push_back(a.jets[i]);
  for (; j < b.jets.size(); ++j) out.jets.push_back(b.jets[j]);
  out.exp.resize(a.exp.size());
  for (std::size_t t = 0; t < a.exp.size(); ++t)
    out.exp[t] = a.exp[t] + b.exp[t];
  return out;
}

void require_same_rank(int a, int b) {
  if (a != b) throw std::invalid_argument("rank mismatch");
}

}  // namespace

DiffPoly::DiffPoly(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
}

DiffPoly DiffPoly::constant(int rank, const Rat& c) {
  DiffPoly p(rank);
  Monomial one;
  one.exp.assign(rank, 0);
  p.add_term(one, c);
  return p;
}

DiffPoly DiffPoly::jet(int rank, int field, int order, int power) {
  if (field < 0 || field >= rank)
    throw std::invalid_argument("field index out of range");
  if (order < 1) throw std::invalid_argument("jet order must be >= 1");
  if (power < 1) throw std::invalid_argument("jet power must be >= 1");
  DiffPoly p(rank);
  Monomial m;
  m.jets.emplace_back(JetVar{field, order}, power);
  m.exp.assign(rank, 0);
  p.add_term(m, Rat(1));
  return p;
}

DiffPoly DiffPoly::exponential(int rank, int field) {
  if (field < 0 || field >= rank)
    throw std::invalid_argument("field index out of range");
  DiffPoly p(rank);
  Monomial m;
  m.exp.assign(rank, 0);
  m.exp[field] = 1;
  p.add_term(m, Rat(1));
  return p;
}

bool DiffPoly::exp_free() const {
  for (const auto& [m, c] : terms_)
    if (!m.exp_free()) return false;
  return true;
}

void DiffPoly::add_term(const Monomial& m, const Rat& c) {
  if (static_cast<int>(m.exp.size()) != rank_)
    throw std::invalid_argument("rank mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly out(rank_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& other) {
  require_same_rank(rank_, other.rank_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& other) {
  require_same_rank(rank_, other.rank_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  require_same_rank(a.rank_, b.rank_);
  DiffPoly out(a.rank_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

DiffPoly operator*(const Rat& c, const DiffPoly& p) {
  DiffPoly out(p.rank_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : p.terms_) out.terms_.emplace(m, c * coeff);
  return out;
}

bool DiffPoly::homogeneous(int* degree_out) const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

DiffPoly d_x(const DiffPoly& p, const CartanMatrix* cartan) {
  const int n = p.rank();
  if (cartan && static_cast<int>(cartan->size()) != n)
    throw std::invalid_argument("rank mismatch");
  DiffPoly out(n);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t t = 0; t < m.jets.size(); ++t) {
      const auto [v, power] = m.jets[t];
      Monomial shifted;
      shifted.jets = jets_with_delta(
          jets_with_delta(m.jets, v, -1), JetVar{v.field, v.order + 1}, 1);
      shifted.exp = m.exp;
      out.add_term(shifted, c * power);
    }
    if (!m.exp_free()) {
      if (!cartan) throw std::invalid_argument("Cartan matrix required");
      for (int j = 0; j < n; ++j) {
        long coef = 0;
        for (int i = 0; i < n; ++i) coef += m.exp[i] * (*cartan)[i][j];
        if (coef == 0) continue;
        Monomial grown;
        grown.jets = jets_with_delta(m.jets, JetVar{j, 1}, 1);
        grown.exp = m.exp;
        out.add_term(grown, c * Rat(coef));
      }
    }
  }
  return out;
}

DiffPoly d_x_iter(const DiffPoly& p, int times, const CartanMatrix* cartan) {
  if (times < 0) throw std::invalid_argument("negative derivative count");
  DiffPoly out = p;
  for (int t = 0; t < times; ++t) out = d_x(out, cartan);
  return out;
}

DiffPoly d_y_toda(const DiffPoly& p, const CartanMatrix& cartan) {
  const int n = p.rank();
  if (static_cast<int>(cartan.size()) != n)
    throw std::invalid_argument("rank mismatch");
  // Image of each jet symbol under the defining substitution, built once
  // per (field, order) pair used by p.
  std::map<std::pair<int, int>, DiffPoly> images;
  auto image = [&](int field, int order) -> const DiffPoly& {
    auto key = std::make_pair(field, order);
    auto it = images.find(key);
    if (it == images.end()) {
      DiffPoly base = Rat(-1) * DiffPoly::exponential(n, field);
      it = images.emplace(key, d_x_iter(base, order - 1, &cartan)).first;
    }
    return it->second;
  };
  DiffPoly out(n);
  for (const auto& [m, c] : p.terms()) {
    if (!m.exp_free())
      throw std::invalid_argument("d_y undefined on exponential terms");
    for (std::size_t t = 0; t < m.jets.size(); ++t) {
      const auto [v, power] = m.jets[t];
      Monomial rest;
      rest.jets = jets_with_delta(m.jets, v, -1);
      rest.exp = m.exp;
      const Rat factor = c * power;
      for (const auto& [mi, ci] : image(v.field, v.order).terms())
        out.add_term(mono_mul(rest, mi), factor * ci);
    }
  }
  return out;
}

std::map<int, DiffPoly> degree_decompose(const DiffPoly& p) {
  std::map<int, DiffPoly> out;
  for (const auto& [m, c] : p.terms()) {
    auto it = out.find(m.degree());
    if (it == out.end())
      it = out.emplace(m.degree(), DiffPoly(p.rank())).first;
    it->second.add_term(m, c);
  }
  return out;
}

}  // namespace toda
