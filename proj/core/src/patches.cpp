#include "gcalc/patches.hpp"

#include <cmath>
#include <numbers>

namespace gcalc {

PatchMap identity_patch(int k, int n) {
  if (k > n) throw DimensionMismatch("identity patch needs k <= n");
  PatchMap p;
  p.domain = KRectangle::unit(k);
  p.ambient_dim = n;
  p.map = [k, n](const Eigen::VectorXd& s) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    x.head(k) = s;
    return x;
  };
  p.jacobian = [k, n](const Eigen::VectorXd&) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, k);
    j.topLeftCorner(k, k).setIdentity();
    return j;
  };
  p.smoothness = Smoothness::smooth;
  p.name = "identity_k";
  return p;
}

PatchMap bent_sheet_patch() {
  PatchMap p;
  p.domain = KRectangle::unit(2);
  p.ambient_dim = 3;
  p.map = [](const Eigen::VectorXd& s) {
    Eigen::VectorXd x(3);
    x[0] = s[0];
    x[1] = s[1];
    x[2] = 0.5 * (1.0 - std::sin(s[0] * s[0])) - 3.0 * s[1];
    return x;
  };
  p.jacobian = [](const Eigen::VectorXd& s) {
    Eigen::MatrixXd j(3, 2);
    j << 1.0, 0.0,
         0.0, 1.0,
         -s[0] * std::cos(s[0] * s[0]), -3.0;
    return j;
  };
  p.smoothness = Smoothness::smooth;
  p.name = "figure2";
  return p;
}

PatchMap disk_polar_patch(double radius) {
  if (radius <= 0.0) throw DomainError("disk radius must be positive");
  PatchMap p;
  p.domain = KRectangle({Interval{0.0, radius},
                         Interval{0.0, 2.0 * std::numbers::pi}});
  p.ambient_dim = 2;
  p.map = [](const Eigen::VectorXd& s) {
    Eigen::VectorXd x(2);
    x[0] = s[0] * std::cos(s[1]);
    x[1] = s[0] * std::sin(s[1]);
    return x;
  };
  p.jacobian = [](const Eigen::VectorXd& s) {
    Eigen::MatrixXd j(2, 2);
    j << std::cos(s[1]), -s[0] * std::sin(s[1]),
         std::sin(s[1]),  s[0] * std::cos(s[1]);
    return j;
  };
  p.smoothness = Smoothness::smooth;
  p.name = "disk_polar";
  return p;
}

PatchMap sphere_octant_patch(double radius) {
  if (radius <= 0.0) throw DomainError("sphere radius must be positive");
  const double half_pi = 0.5 * std::numbers::pi;
  PatchMap p;
  p.domain = KRectangle({Interval{0.0, half_pi}, Interval{0.0, half_pi}});
  p.ambient_dim = 3;
  p.map = [radius](const Eigen::VectorXd& s) {
    Eigen::VectorXd x(3);
    x[0] = radius * std::sin(s[0]) * std::cos(s[1]);
    x[1] = radius * std::sin(s[0]) * std::sin(s[1]);
    x[2] = radius * std::cos(s[0]);
    return x;
  };
  p.jacobian = [radius](const Eigen::VectorXd& s) {
    Eigen::MatrixXd j(3, 2);
    j << radius * std::cos(s[0]) * std::cos(s[1]),
         -radius * std::sin(s[0]) * std::sin(s[1]),
         radius * std::cos(s[0]) * std::sin(s[1]),
         radius * std::sin(s[0]) * std::cos(s[1]),
         -radius * std::sin(s[0]), 0.0;
    return j;
  };
  p.smoothness = Smoothness::smooth;
  p.name = "sphere_octant";
  return p;
}

PatchMap linear_patch(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  const int k = static_cast<int>(a.cols());
  PatchMap p;
  p.domain = KRectangle::unit(k);
  p.ambient_dim = n;
  p.map = [a](const Eigen::VectorXd& s) -> Eigen::VectorXd { return a * s; };
  p.jacobian = [a](const Eigen::VectorXd&) { return a; };
  p.smoothness = Smoothness::smooth;
  p.name = "linear";
  p.validate();
  return p;
}

PatchMap graph2d_patch(std::function<double(double, double)> h,
                       std::function<Eigen::Vector2d(double, double)> grad_h,
                       std::string name) {
  PatchMap p;
  p.domain = KRectangle::unit(2);
  p.ambient_dim = 3;
  p.map = [h](const Eigen::VectorXd& s) {
    Eigen::VectorXd x(3);
    x[0] = s[0];
    x[1] = s[1];
    x[2] = h(s[0], s[1]);
    return x;
  };
  if (grad_h) {
    p.jacobian = [grad_h](const Eigen::VectorXd& s) {
      const Eigen::Vector2d g = grad_h(s[0], s[1]);
      Eigen::MatrixXd j(3, 2);
      j << 1.0, 0.0,
           0.0, 1.0,
           g[0], g[1];
      return j;
    };
  }
  p.smoothness = Smoothness::c2;
  p.name = std::move(name);
  return p;
}

PatchMap segment_patch(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("segment endpoints have different dimensions");
  PatchMap p;
  p.domain = KRectangle::unit(1);
  p.ambient_dim = static_cast<int>(a.size());
  p.map = [a, b](const Eigen::VectorXd& s) -> Eigen::VectorXd {
    return a + s[0] * (b - a);
  };
  p.jacobian = [a, b](const Eigen::VectorXd&) -> Eigen::MatrixXd {
    return b - a;
  };
  p.smoothness = Smoothness::smooth;
  p.name = "segment";
  p.validate();
  return p;
}

PatchMap arc_patch(const Eigen::Vector2d& center, double radius, double angle0,
                   double angle1) {
  if (radius <= 0.0) throw DomainError("arc radius must be positive");
  if (angle0 == angle1) throw DomainError("arc must span a nonzero angle");
  PatchMap p;
  p.domain = KRectangle::unit(1);
  p.ambient_dim = 2;
  p.map = [=](const Eigen::VectorXd& s) {
    const double a = angle0 + s[0] * (angle1 - angle0);
    Eigen::VectorXd x(2);
    x[0] = center[0] + radius * std::cos(a);
    x[1] = center[1] + radius * std::sin(a);
    return x;
  };
  p.jacobian = [=](const Eigen::VectorXd& s) {
    const double a = angle0 + s[0] * (angle1 - angle0);
    const double da = angle1 - angle0;
    Eigen::MatrixXd j(2, 1);
    j << -radius * std::sin(a) * da,
          radius * std::cos(a) * da;
    return j;
  };
  p.smoothness = Smoothness::smooth;
  p.name = "arc";
  return p;
}

PatchComplex circle_boundary(double radius, const Eigen::Vector2d& center) {
  // Clockwise parametrization, so that I^-1 applied to the unit tangent
  // gives the outward normal.
  PatchMap p = arc_patch(center, radius, 0.0, -2.0 * std::numbers::pi);
  p.name = "circle";
  return glue_patches({OrientedPatch{std::move(p), +1}});
}

PatchComplex sphere_boundary(double radius) {
  if (radius <= 0.0) throw DomainError("sphere radius must be positive");
  std::vector<OrientedPatch> parts;
  for (int axis = 0; axis < 3; ++axis) {
    for (int sigma : {+1, -1}) {
      const int b = (axis == 0) ? 1 : 0;
      const int c = (axis == 2) ? 1 : 2;
      PatchMap p;
      p.domain = KRectangle({Interval{-1.0, 1.0}, Interval{-1.0, 1.0}});
      p.ambient_dim = 3;
      p.map = [=](const Eigen::VectorXd& s) -> Eigen::VectorXd {
        Eigen::Vector3d q;
        q[axis] = static_cast<double>(sigma);
        q[b] = s[0];
        q[c] = s[1];
        return radius * q / q.norm();
      };
      p.jacobian = [=](const Eigen::VectorXd& s) -> Eigen::MatrixXd {
        Eigen::Vector3d q;
        q[axis] = static_cast<double>(sigma);
        q[b] = s[0];
        q[c] = s[1];
        const double r = q.norm();
        Eigen::Vector3d du = Eigen::Vector3d::Zero();
        Eigen::Vector3d dv = Eigen::Vector3d::Zero();
        du[b] = 1.0;
        dv[c] = 1.0;
        Eigen::MatrixXd j(3, 2);
        j.col(0) = radius * (du / r - q * (q.dot(du)) / (r * r * r));
        j.col(1) = radius * (dv / r - q * (q.dot(dv)) / (r * r * r));
        return j;
      };
      p.smoothness = Smoothness::smooth;
      p.name = "sphere_face";
      // Tangent order (b, c) gives e_b ^ e_c at the face center; flipping to
      // the outward side costs a sign on the middle axis and on sigma = -1.
      const int orientation = ((axis == 1) ? -1 : +1) * sigma;
      parts.push_back(OrientedPatch{std::move(p), orientation});
    }
  }
  return glue_patches(std::move(parts));
}

}  // namespace gcalc
