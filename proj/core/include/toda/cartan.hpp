#pragma once

#include <string>
#include <vector>

namespace toda {

// The five supported simple Lie algebra families.
enum class Family { A, B, C, D, G2 };

// A (family, rank) pair naming one simple Lie algebra.
// Valid ranks: A >= 1, B >= 2, C >= 2, D >= 3, G2 exactly 2.
struct AlgebraSpec {
  Family family;
  int rank;

  // Parses "A3", "b2", "D4", "G2", ...; throws std::invalid_argument on
  // anything else (including invalid ranks).
  static AlgebraSpec parse(const std::string& text);

  std::string str() const;

  // The first fundamental representation of the D family has a branching
  // weight graph, which rules out the factorized-operator method.
  bool branching() const { return family == Family::D; }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

// Throws std::invalid_argument if the family/rank combination is invalid.
void validate(const AlgebraSpec& spec);

// Integer Cartan matrix a_ij, indexed [i][j], 0-based.
using CartanMatrix = std::vector<std::vector<int>>;

CartanMatrix cartan_matrix(const AlgebraSpec& spec);

}  // namespace toda
