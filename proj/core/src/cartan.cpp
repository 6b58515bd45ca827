#include "toda/cartan.hpp"

#include <cctype>
#include <stdexcept>

namespace toda {

namespace {

Family family_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A':
      return Family::A;
    case 'B':
      return Family::B;
    case 'C':
      return Family::C;
    case 'D':
      return Family::D;
    case 'G':
      return Family::G2;
    default:
      throw std::invalid_argument("unknown algebra family");
  }
}

char family_letter(Family f) {
  switch (f) {
    case Family::A:
      return 'A';
    case Family::B:
      return 'B';
    case Family::C:
      return 'C';
    case Family::D:
      return 'D';
    case Family::G2:
      return 'G';
  }
  throw std::invalid_argument("unknown algebra family");
}

}  // namespace

AlgebraSpec AlgebraSpec::parse(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("algebra spec too short");
  Family family = family_from_letter(text[0]);
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("algebra rank must be a number");
    rank = rank * 10 + (text[i] - '0');
    if (rank > 64) throw std::invalid_argument("algebra rank out of range");
  }
  AlgebraSpec spec{family, rank};
  validate(spec);
  return spec;
}

std::string AlgebraSpec::str() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

void validate(const AlgebraSpec& spec) {
  switch (spec.family) {
    case Family::A:
      if (spec.rank >= 1) return;
      break;
    case Family::B:
    case Family::C:
      if (spec.rank >= 2) return;
      break;
    case Family::D:
      if (spec.rank >= 3) return;
      break;
    case Family::G2:
      if (spec.rank == 2) return;
      break;
  }
  throw std::invalid_argument("invalid rank for family " +
                              std::string(1, family_letter(spec.family)));
}

CartanMatrix cartan_matrix(const AlgebraSpec& spec) {
  validate(spec);
  const int n = spec.rank;
  if (spec.family == Family::G2) return {{2, -1}, {-3, 2}};
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (spec.family) {
    case Family::A:
    case Family::B:
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
      }
      if (spec.family == Family::B) a[n - 2][n - 1] = -2;
      if (spec.family == Family::C) a[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 2; ++i) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
      }
      a[n - 3][n - 2] = a[n - 2][n - 3] = -1;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case Family::G2:
      break;
  }
  return a;
}

}  // namespace toda
