#pragma once

#include <string>

#include "gcalc/multivector.hpp"

namespace gcalc {

/// Render a multivector in the textual term format, e.g. "0.5 + 1.5*e12 - 2*e3".
/// Terms are emitted in ascending blade-mask order; coefficients use the
/// shortest representation that parses back to the identical double, so
/// parse_multivector(format_multivector(m)) == m holds coefficient-exact.
/// The zero multivector prints as "0".
std::string format_multivector(const Multivector& m);

/// Parse the textual term format.  Blade factors are written e followed by
/// ascending single-digit 1-based indices ("e12" is e_1 e_2), which covers
/// algebras up to dimension 9; indices above 9 are rejected.  Accepts bare
/// coefficients ("0.5"), bare blades ("e12", "-e3") and "coef*e..." terms in
/// any order.  Throws ParseError with a 1-based column on malformed input.
Multivector parse_multivector(const std::string& text, int dim);

/// Shortest round-trip decimal rendering of a double (used for every number
/// the library prints, so emitted files are reproducible byte for byte).
std::string format_double(double v);

}  // namespace gcalc
