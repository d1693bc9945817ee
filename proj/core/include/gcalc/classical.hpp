#pragma once

#include "gcalc/integrator.hpp"

namespace gcalc {

/// Endpoint agreement tolerance (relative to max(1, |endpoint|)) for the
/// path-independence check.
inline constexpr double kEndpointTol = 1e-10;

/// Gradient integrals along two curves that share endpoints.  Both integrals
/// must equal f(b) - f(a); curves whose endpoints disagree beyond
/// kEndpointTol raise EndpointMismatch.
struct PathIndependenceReport {
  Multivector along_first;
  Multivector along_second;
  Multivector endpoint_difference;
  double curve_gap = 0.0;          ///< |first - second|, inf norm
  double endpoint_residual = 0.0;  ///< worst residual against f(b) - f(a)
  long nodes = 0;
};
PathIndependenceReport path_independence_check(
    const FieldFn& f, const PatchMap& first, const PatchMap& second,
    const QuadratureSpec& spec, DerivMode mode = DerivMode::automatic);

/// Green's theorem on a planar region, both classical forms at once.
/// The directed identity integral_R dx_(2) del f = integral_boundary dx f
/// splits by grade: the scalar parts carry circulation/curl (the induced
/// boundary runs clockwise, hence the sign flips in the extraction) and the
/// e12 parts carry outward flux/divergence.  The four `*_direct` numbers are
/// computed classically with plain dot products and scalar quadrature, and
/// extraction_gap records how far the grade parts of the directed identity
/// sit from them.
struct GreenReport {
  FtcReport ftc;
  double circulation_ccw = 0.0;       ///< direct counterclockwise line integral
  double curl_area_integral = 0.0;    ///< direct integral of d1 f2 - d2 f1
  double flux_outward = 0.0;          ///< direct line integral of n . f
  double divergence_area_integral = 0.0;
  double circulation_residual = 0.0;  ///< |circulation - curl integral|
  double flux_residual = 0.0;         ///< |flux - divergence integral|
  double extraction_gap = 0.0;
  double offgrade_norm = 0.0;  ///< grade-1 content of either directed side
  long nodes = 0;
};
GreenReport greens_theorem_check(const FieldFn& f, const PatchMap& region,
                                 const QuadratureSpec& spec,
                                 DerivMode mode = DerivMode::automatic);

/// Stokes' theorem on a 2-surface in R^3.  The unit normal is I x2hat (the
/// dual of the unit tangent bivector), which is the orientation paired with
/// the induced boundary, and the curl vector is -I (del ^ f).  Scalar parts
/// of the directed identity reproduce both sides.
struct StokesReport {
  FtcReport ftc;
  double circulation = 0.0;  ///< direct line integral, induced orientation
  double curl_flux = 0.0;    ///< direct integral of (curl f) . n over the surface
  double scalar_residual = 0.0;
  double extraction_gap = 0.0;
  long nodes = 0;
};
StokesReport stokes_theorem_check(const FieldFn& f, const PatchMap& surface,
                                  const QuadratureSpec& spec,
                                  DerivMode mode = DerivMode::automatic);

/// Divergence theorem on a full-dimensional volume (k = n).  The outward
/// normal times the face area element is I^-1 times the oriented face
/// measure, so the direct flux needs no normalization.  Pseudoscalar parts
/// of the directed identity reproduce both sides.
struct GaussReport {
  FtcReport ftc;
  double divergence_integral = 0.0;  ///< direct integral of (del . f) det J
  double flux = 0.0;                 ///< direct outward flux through all faces
  double scalar_residual = 0.0;
  double extraction_gap = 0.0;
  long nodes = 0;
};
GaussReport gauss_divergence_check(const FieldFn& f, const PatchMap& volume,
                                   const QuadratureSpec& spec,
                                   DerivMode mode = DerivMode::automatic);

}  // namespace gcalc
