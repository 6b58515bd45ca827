#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace toda {

// Exact rational scalar with arbitrary-precision numerator/denominator.
// All arithmetic results stay in canonical form (reduced, denominator > 0);
// the helpers below canonicalize at the construction boundaries where GMP
// does not do it automatically.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q" (q > 0 after reduction). Throws std::invalid_argument
// on any other input.
Rat rat_from_string(const std::string& text);

// Canonical decimal string: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& value);

}  // namespace toda
