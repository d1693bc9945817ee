#pragma once

#include <cstdint>

#include "gcalc/integrator.hpp"

namespace gcalc {

/// Surface area of the unit sphere in R^n: 2 pi^(n/2) / Gamma(n/2).
double unit_sphere_area(int n);

/// Monogenicity thresholds on |del f|, by derivative path.
inline constexpr double kMonogenicTolAnalytic = 1e-10;
inline constexpr double kMonogenicTolFd = 1e-6;

/// Radius of the faded-out ball around the evaluation point in the volume
/// correction, in multiples of the ambient volume-cell width.
inline constexpr double kExclusionCells = 2.0;

/// Interior margin for reconstruction points, in multiples of the spacing
/// between boundary quadrature nodes; closer points trigger the
/// near-boundary flag.
inline constexpr double kBoundaryMarginCells = 5.0;

struct SampleSpec {
  long count = 200;
  std::uint64_t seed = kDefaultSeed;
  double exclusion_radius = 0.25;  ///< kept clear around a declared singularity
};

struct MonogenicityReport {
  long samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool monogenic = false;
};

/// Sample |del f| at random points of the box.  The field counts as
/// monogenic when the largest residual stays under the tolerance for the
/// derivative path taken (kMonogenicTolAnalytic when an analytic derivative
/// is used, kMonogenicTolFd under finite differences).  Draws landing within
/// exclusion_radius of a declared singularity are rejected and redrawn.
MonogenicityReport monogenicity_certificate(
    const FieldFn& f, const KRectangle& box, const SampleSpec& sample,
    DerivMode mode = DerivMode::automatic);

struct CauchyReport {
  Multivector reconstructed;
  Multivector direct;  ///< f evaluated at the reconstruction point
  double abs_err = 0.0;
  double boundary_distance = 0.0;  ///< coarse estimate, ambient metric
  double margin = 0.0;
  bool near_boundary = false;  ///< kernel peak unresolved by the quadrature
  long nodes = 0;
};

/// Reconstruct a monogenic f at an interior point from boundary data alone:
///   f(x') = (-1)^(n-1) I^-1 (1/Omega_n) integral_boundary K dx_(n-1) f,
/// with K(y) = (y - x') / |y - x'|^n.  The boundary is a closed chain of
/// (n-1)-patches oriented so that I^-1 times the directed measure points
/// outward (the convention of the shipped boundary builders).
CauchyReport cauchy_reconstruct(const FieldFn& f, const PatchComplex& boundary,
                                const Eigen::VectorXd& xprime,
                                const QuadratureSpec& spec);
CauchyReport cauchy_reconstruct(const FieldFn& f, const PatchMap& boundary,
                                const Eigen::VectorXd& xprime,
                                const QuadratureSpec& spec);

struct FullCauchyReport {
  Multivector reconstructed;
  Multivector direct;
  double abs_err = 0.0;
  double excluded_radius = 0.0;      ///< r0 of the skipped ball around x'
  double excluded_error_bound = 0.0; ///< r0 times an estimate of sup |del f|
  long nodes = 0;
};

/// The formula without the monogenicity assumption: the boundary term above
/// plus the volume correction
///   -(-1)^(n-1) I^-1 (1/Omega_n) integral_M K dx_(n) del f.
/// The correction integrand is faded out smoothly (C^2 radial cutoff) inside
/// a ball of radius r0 around x', keeping the quadrature on a smooth
/// integrand.  The kernel is integrable there, so the omitted mass is
/// bounded by r0 sup |del f|, which the report carries as
/// excluded_error_bound; for del f symmetric about x' the omission cancels
/// and the actual error sits far below the bound.
FullCauchyReport full_cauchy_formula(const FieldFn& f, const PatchMap& volume,
                                     const Eigen::VectorXd& xprime,
                                     const QuadratureSpec& spec,
                                     DerivMode mode = DerivMode::automatic);

}  // namespace gcalc
