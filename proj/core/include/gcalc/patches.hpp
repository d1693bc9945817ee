#pragma once

#include "gcalc/patch.hpp"

namespace gcalc {

/// The identity embedding of [0,1]^k into the first k coordinates of R^n.
PatchMap identity_patch(int k, int n);
inline PatchMap identity_patch(int k) { return identity_patch(k, k); }

/// The bent sheet over the unit square in R^3:
///   x(s1, s2) = (s1, s2, (1 - sin(s1^2))/2 - 3 s2).
PatchMap bent_sheet_patch();

/// Planar disk of the given radius about the origin, polar parameters
/// (r, theta) in [0, radius] x [0, 2 pi].  The r = 0 boundary face is
/// degenerate; interior quadrature nodes never touch it and its boundary
/// measure vanishes.
PatchMap disk_polar_patch(double radius);

/// One octant of the sphere of the given radius:
///   x(s1, s2) = radius (sin s1 cos s2, sin s1 sin s2, cos s1),
/// (s1, s2) in [0, pi/2]^2.
PatchMap sphere_octant_patch(double radius);

/// Linear patch s -> A s over [0,1]^k where A is n x k.
PatchMap linear_patch(const Eigen::MatrixXd& a);

/// Graph surface (s1, s2, h(s1, s2)) over [0,1]^2.  grad_h returns
/// (dh/ds1, dh/ds2); pass an empty function to fall back to finite
/// differences.
PatchMap graph2d_patch(std::function<double(double, double)> h,
                       std::function<Eigen::Vector2d(double, double)> grad_h,
                       std::string name = "graph2d");

/// Straight segment from a to b over [0,1].
PatchMap segment_patch(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Circular arc in R^2 about `center`, angle running from angle0 to angle1.
PatchMap arc_patch(const Eigen::Vector2d& center, double radius, double angle0,
                   double angle1);

/// Boundary complexes for the closed-contour integrals.  Both are oriented
/// so that the outward unit normal is recovered as I^-1 applied to the unit
/// tangent (n-1)-vector, matching the induced orientation of the faces of a
/// positively oriented volume patch.

/// Circle of the given radius about `center`, a single 1-patch in R^2.
PatchComplex circle_boundary(double radius,
                             const Eigen::Vector2d& center = {0.0, 0.0});

/// Sphere of the given radius about the origin in R^3, assembled from six
/// mapped cube faces.
PatchComplex sphere_boundary(double radius);

}  // namespace gcalc
