#pragma once

#include <cstdint>
#include <vector>

#include "gcalc/field.hpp"
#include "gcalc/patch.hpp"

namespace gcalc {

/// How field derivatives are obtained.
enum class DerivMode {
  automatic,  ///< analytic when the field carries one, else finite differences
  force_fd,   ///< always finite differences (for cross-validation)
};

/// Directional derivative D_v f(x).  The finite-difference path steps along
/// v with a 4th-order central stencil.
Multivector field_directional(const FieldFn& f, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& v,
                              DerivMode mode = DerivMode::automatic);

/// The flat vector derivative of a field on R^n itself:
///   del f = sum_i e_i (d f / d x^i),
/// acting from the left.
Multivector flat_vector_derivative(const FieldFn& f, const Eigen::VectorXd& x,
                                   DerivMode mode = DerivMode::automatic);

/// Two-sided vector derivative of the pair (g, f) on a patch at parameter s:
///   g del f = sum_i d/ds^i ( g* x^i f* ),
/// where only the starred (field) factors are differentiated and the
/// reciprocal frame vector x^i is frozen at s.  per_axis holds the k
/// summands in axis order.
struct TwoSidedResult {
  Multivector value;
  std::vector<Multivector> per_axis;
};
TwoSidedResult two_sided_derivative(const FieldFn& g, const FieldFn& f,
                                    const PatchMap& p, const Eigen::VectorXd& s,
                                    DerivMode mode = DerivMode::automatic);

/// Integrand of the volume side of the fundamental theorem at parameter s:
///   sum_i d/ds^i ( g* x_(k) x^i f* ),
/// the tangent k-vector and reciprocal frozen per node.  The middle factor
/// x_(k) x^i is evaluated through the contraction identity
/// (-1)^(k-i) x_1 ^ ... omit i ... ^ x_k, so no frame inversion is needed.
Multivector ftc_volume_integrand(const FieldFn& g, const FieldFn& f,
                                 const PatchMap& p, const Eigen::VectorXd& s,
                                 DerivMode mode = DerivMode::automatic);

/// Residual of the frame lemma  sum_{i<=j} d/ds^i ( x_(j) . x^i ) = 0  at s,
/// differentiating the full frame composite by central differences.  Returns
/// the norm of the left-hand side, which is zero up to discretization error.
double frame_lemma_residual(const PatchMap& p, const Eigen::VectorXd& s, int j);

/// Default seed for every randomized routine in the library.
inline constexpr std::uint64_t kDefaultSeed = 0xC11FF0DDull;

/// One row of the vector-derivative identity suite.
struct IdentityRow {
  int formula_id = 0;      ///< 1..7
  long trials = 0;
  double max_rel_err = 0.0;
  double mean_rel_err = 0.0;
};

/// Monte-Carlo check of the classical vector-derivative identities
///   (1) del . x = n,  del ^ x = 0
///   (2) a . del x = a = del (x . a)
///   (3) del x^2 = 2 x
///   (4) del |x| = x / |x|
///   (5) del |x|^k = k |x|^(k-2) x
///   (6) del (x / |x|^k) = (n - k) / |x|^k
///   (7) del log |x| = x / |x|^2
/// at `trials` points drawn uniformly from [-2, 2]^n with the ball of
/// radius 0.1 about the origin rejected.  Relative error uses
/// |computed - expected| / max(1, |expected|).
std::vector<IdentityRow> identity_suite(int dim, long trials,
                                        std::uint64_t seed = kDefaultSeed,
                                        DerivMode mode = DerivMode::force_fd);

}  // namespace gcalc
