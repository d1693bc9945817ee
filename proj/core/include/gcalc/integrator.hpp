#pragma once

#include <optional>

#include "gcalc/derivative.hpp"
#include "gcalc/field.hpp"
#include "gcalc/quadrature.hpp"

namespace gcalc {

struct IntegralResult {
  Multivector value;
  long node_count = 0;
  std::optional<double> est_error;  ///< |value(2m) - value(m)| when requested
};

/// Directed integral over the patch:  integral_M g dx_(k) f
///   = integral_R g(x(s)) x_(k)(s) f(x(s)) ds.
/// The factor order is fixed; the geometric product does not commute.
IntegralResult directed_integral(const FieldFn& g, const PatchMap& p,
                                 const FieldFn& f, const QuadratureSpec& spec);
IntegralResult directed_integral(const FieldFn& g, const PatchComplex& c,
                                 const FieldFn& f, const QuadratureSpec& spec);

/// Boundary integral  integral_beta(M) g dx_(k-1) f  over the 2k oriented
/// faces.  For k = 1 this is the exact two-point endpoint formula
/// g(x(b)) f(x(b)) - g(x(a)) f(x(a)); no quadrature is involved.
IntegralResult boundary_integral(const FieldFn& g, const PatchMap& p,
                                 const FieldFn& f, const QuadratureSpec& spec);
IntegralResult boundary_integral(const FieldFn& g, const PatchComplex& c,
                                 const FieldFn& f, const QuadratureSpec& spec);

/// Directed content D(M) = integral_M dx_(k), and the same for the boundary
/// chain; the boundary value is zero for every closed chain (the corollary
/// used as the orientation sanity check).
IntegralResult directed_content(const PatchMap& p, const QuadratureSpec& spec);
IntegralResult directed_content(const PatchComplex& c, const QuadratureSpec& spec);
IntegralResult boundary_content(const PatchMap& p, const QuadratureSpec& spec);
IntegralResult boundary_content(const PatchComplex& c, const QuadratureSpec& spec);

/// Residual norms use max(1, |rhs|) in the denominator, coefficient-wise
/// infinity norm on top.
double relative_residual(const Multivector& lhs, const Multivector& rhs);

struct FtcRow {
  int points = 0;         ///< q
  int subdivisions = 0;   ///< m of this row
  double lhs_norm = 0.0;
  double rhs_norm = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  long nodes = 0;
  double wall_ms = 0.0;
};

struct FtcReport {
  Multivector lhs;   ///< volume side at the base resolution
  Multivector rhs;   ///< boundary side at the base resolution
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  std::vector<FtcRow> table;  ///< rows at m, 2m, 4m, ... (refinements entries)
};

/// Check of the fundamental theorem
///   integral_M g dx_(k) del f = integral_beta(M) g dx_(k-1) f
/// on one patch or a complex, with a refinement table doubling the
/// subdivision count per row.
FtcReport ftc_check(const FieldFn& g, const FieldFn& f, const PatchMap& p,
                    const QuadratureSpec& spec, int refinements = 3,
                    DerivMode mode = DerivMode::automatic);
FtcReport ftc_check(const FieldFn& g, const FieldFn& f, const PatchComplex& c,
                    const QuadratureSpec& spec, int refinements = 3,
                    DerivMode mode = DerivMode::automatic);

}  // namespace gcalc
