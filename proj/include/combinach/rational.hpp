#pragma once

#include <gmpxx.h>

#include <string>

namespace combinach {

using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with q > 0 after sign normalization.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

// Rounded decimal rendering for the labeled decimal column of CSV output.
std::string decimal_approx(const Rational& value, int digits = 6);

}  // namespace combinach
