// Shared fixtures and helpers for the test suite.
//
// The fixture strings record polynomial values captured from an independent
// implementation of the same pipelines; tests parse them with the local
// parser below and compare exactly. parse_poly is intentionally separate
// from the library's own serializers so that printing bugs cannot mask
// computation bugs.
#pragma once

#include <map>
#include <random>
#include <string>

#include "toda/diffpoly.hpp"

namespace toda::testing {

// g2 integrals computed by composing the factorized operator.
extern const char* const kG2I1;
extern const char* const kG2I2;

// D4 integrals from the gauge reduction onto the reference slice.
extern const char* const kD4I1;
extern const char* const kD4I2;
extern const char* const kD4I3;
// The degree-1 (in jet powers) part of D4's I_4; the z6 coefficient is zero.
extern const char* const kD4I4Linear;

// Hand-derived small-case values.
extern const char* const kA1QuickI1;     // u-only, indexed naming
extern const char* const kA2QuickI1;
extern const char* const kA2QuickI2;
extern const char* const kA1DyU3Factor;  // d_y(u_xxx) = (this) * e^{rho_1}

// Field-name maps matching the library's printing conventions.
std::map<std::string, int> g2_names();
std::map<std::string, int> d4_names();
std::map<std::string, int> indexed_names(int rank);

// Parses an exponential-free polynomial: terms "coeff*fac*fac", factors
// "name_order", "name<order>" (compact), optional "^power"; coefficients
// "p" or "p/q". Throws std::invalid_argument on malformed input.
DiffPoly parse_poly(const std::string& text,
                    const std::map<std::string, int>& names, int rank);

// Deterministic pseudo-random data for property tests.
Rat random_rat(std::mt19937& rng);
DiffPoly random_poly(std::mt19937& rng, int rank, int max_terms, int max_order,
                     int max_power, bool allow_exp);

}  // namespace toda::testing
