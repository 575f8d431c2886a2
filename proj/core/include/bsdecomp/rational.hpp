#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace bsdecomp {

// Exact arbitrary-precision rational. Every arithmetic path in the engine
// goes through this type; there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// Degrees and homological indices. Signed: duals negate degrees.
using Int = std::int64_t;

// Canonical (reduced, positive denominator) rational from a fraction.
Rational make_rational(Int num, Int den = 1);

Rational from_int(Int value);

// Parses "n" or "n/d" with optional sign. Throws BadRational on anything
// else, including a zero denominator.
Rational parse_rational(const std::string& text);

// Renders "n" when the value is integral, "n/d" otherwise.
std::string to_string(const Rational& value);

// Largest integer <= value.
Int floor_to_int(const Rational& value);

bool fits_in_int(const Rational& value);

}  // namespace bsdecomp
