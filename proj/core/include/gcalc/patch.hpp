#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gcalc/multivector.hpp"

namespace gcalc {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double length() const { return hi - lo; }
};

/// Axis-aligned parameter box in R^k, k >= 1, with nondegenerate intervals.
class KRectangle {
 public:
  /// Empty placeholder (k = 0); assign a real box before use.
  KRectangle() = default;
  explicit KRectangle(std::vector<Interval> bounds);
  /// Unit box [0,1]^k.
  static KRectangle unit(int k);

  int k() const { return static_cast<int>(bounds_.size()); }
  const Interval& bound(int axis) const { return bounds_.at(axis); }
  const std::vector<Interval>& bounds() const { return bounds_; }
  double volume() const;
  bool contains(const Eigen::VectorXd& s, double slack = 0.0) const;
  Eigen::VectorXd center() const;

 private:
  std::vector<Interval> bounds_;
};

/// One face of the boundary chain: parameter axis `axis` (0-based) pinned to
/// its upper (side = +1) or lower (side = -1) end.  `profile` holds the
/// remaining k-1 intervals in axis order (empty when k = 1).
struct Face {
  int axis = 0;
  int side = +1;
  double pinned = 0.0;
  std::vector<Interval> profile;

  /// Lift a face parameter t in R^(k-1) to the full parameter point in R^k.
  Eigen::VectorXd lift(const Eigen::VectorXd& t) const;
};

/// The 2k faces of R in the fixed order (axis 0, +), (axis 0, -), (axis 1, +), ...
std::vector<Face> boundary_chain(const KRectangle& r);

enum class Smoothness { c1, c2, smooth };

/// A parametrized k-patch: a map from a parameter box into R^n.  When the
/// analytic `jacobian` (n x k, columns are tangent vectors) is absent,
/// tangents come from 4th-order finite differences with stencils clamped to
/// the domain, so the map is never evaluated outside its box.
struct PatchMap {
  KRectangle domain;
  int ambient_dim = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> map;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;  // optional
  Smoothness smoothness = Smoothness::c2;
  std::string name;

  int k() const { return domain.k(); }
  void validate() const;
};

/// Tolerance for the frame regularity test: |x_(k)| must exceed this times
/// the product of the tangent magnitudes.
inline constexpr double kRegularityEps = 1e-10;

/// Frame data at one parameter point: the mapped point, the k tangent
/// vectors, their wedge x_(k), and the reciprocal frame with x^i . x_j = d^i_j.
struct FrameData {
  Eigen::VectorXd point;
  std::vector<Multivector> tangents;
  Multivector kvector;
  std::vector<Multivector> reciprocals;

  FrameData(int dim, int k)
      : point(), tangents(), kvector(dim), reciprocals() {}
};

/// Tangent matrix (n x k) at s, analytic when available, else finite
/// differences.  Does not test regularity.
Eigen::MatrixXd tangent_matrix(const PatchMap& p, const Eigen::VectorXd& s);

/// Full frame at s.  Throws RegularityError when the tangent k-vector is
/// numerically degenerate, DomainError when s lies outside the box.
FrameData tangent_frame(const PatchMap& p, const Eigen::VectorXd& s);

/// Wedge x_1 ^ ... ^ x_k of the columns of a tangent matrix.
Multivector wedge_columns(const Eigen::MatrixXd& cols, int ambient_dim);

/// Oriented face measure at face parameter t: side * x_(k) x^i, evaluated in
/// the reciprocal-free form side * (-1)^(k-i) x_1^...^(omit i)...^x_k so it
/// stays finite on faces where the full frame degenerates.  For k = 1 the
/// measure is the scalar +-1.  Returns the measure and the mapped point.
struct FaceSample {
  Eigen::VectorXd point;
  Multivector measure;
};
FaceSample face_measure(const PatchMap& p, const Face& face,
                        const Eigen::VectorXd& t);

/// Frame plus oriented measure on a face; the frame is the full k-frame of
/// the patch at the lifted point and inherits tangent_frame's error behavior.
struct FaceFrame {
  FrameData frame;
  Multivector measure;
};
FaceFrame face_frame(const PatchMap& p, const Face& face,
                     const Eigen::VectorXd& t);

/// A patch together with a chain coefficient of +1 or -1.
struct OrientedPatch {
  PatchMap patch;
  int orientation = +1;
};

/// Formal sum of oriented k-patches.  Integrals over a complex are the
/// orientation-weighted sums of per-patch integrals; no geometric face
/// matching is performed at construction time.
struct PatchComplex {
  std::vector<OrientedPatch> parts;

  int k() const { return parts.front().patch.k(); }
  int ambient_dim() const { return parts.front().patch.ambient_dim; }
};

/// Bundle patches into a complex.  Validates that the list is nonempty and
/// that every patch agrees on k and the ambient dimension; the caller asserts
/// orientation consistency, which can be probed afterwards with
/// glue_consistency_residual.
PatchComplex glue_patches(std::vector<OrientedPatch> parts);

/// A-posteriori orientation probe: boundary faces of different parts whose
/// image midpoints coincide are paired, and each pair's measure integrals
/// must cancel.  Returns the largest norm of a non-cancelling pair sum
/// (0 when no faces pair up).  samples_per_axis controls the probe quadrature.
double glue_consistency_residual(const PatchComplex& c,
                                 int samples_per_axis = 9);

}  // namespace gcalc
