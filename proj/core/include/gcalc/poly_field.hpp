#pragma once

#include <string>
#include <vector>

#include "gcalc/field.hpp"

namespace gcalc {

/// One canonical term of a multivector polynomial:
/// coef * x1^powers[0] * ... * xn^powers[n-1] * blade.
struct PolyTerm {
  double coef = 0.0;
  std::vector<int> powers;
  BladeIndex blade = 0;
};

/// Parse the polynomial grammar
///
///   field   := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := number | variable | blade | '(' field ')'
///   variable:= 'x' digits           1-based coordinate, power via '^' digits
///   blade   := 'e' digits           ascending 1-based factors, e.g. e13
///
/// into a canonical term list: products are expanded, blades multiplied
/// geometrically, like terms merged, zero terms dropped, and the result
/// sorted by blade then exponents.  '^' with a nonnegative integer exponent
/// also applies to parenthesized groups and blades.  Errors carry 1-based
/// line/column positions.
std::vector<PolyTerm> parse_poly(const std::string& src, int dim);

/// Canonical text form of a term list; parse_poly(format_poly(t)) == t.
std::string format_poly(const std::vector<PolyTerm>& terms, int dim);

/// Exact evaluation of a term list.
Multivector eval_poly(const std::vector<PolyTerm>& terms, int dim,
                      const Eigen::VectorXd& x);

/// Field with exact evaluation and exact analytic directional derivatives.
/// The field's name is the canonical form of the parsed polynomial.
FieldFn poly_field(int dim, const std::string& source);

}  // namespace gcalc
