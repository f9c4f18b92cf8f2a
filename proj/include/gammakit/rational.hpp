#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gammakit {

// Exact arithmetic types used throughout. All rank computations and
// exchange formats stay rational; doubles appear only in fitted slopes
// and the Hamiltonian numerics.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(std::int64_t num, std::int64_t den = 1) { return Rat(num, den); }

// Parses "p", "-p/q" or "p/q" with arbitrary-precision integers.
Rat parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when q == 1); inverse of parse_rational.
std::string format_rational(const Rat& value);

double to_double(const Rat& value);

// log(n) for a positive big integer, stable far beyond double range.
double log_big(const Int& n);

}  // namespace gammakit
