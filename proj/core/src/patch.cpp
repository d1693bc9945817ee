#include "gcalc/patch.hpp"

#include <cmath>

#include "gcalc/fdiff.hpp"

namespace gcalc {

KRectangle::KRectangle(std::vector<Interval> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw DomainError("parameter box needs at least one axis");
  for (const auto& b : bounds_)
    if (!(b.lo < b.hi)) throw DomainError("parameter interval must have lo < hi");
}

KRectangle KRectangle::unit(int k) {
  return KRectangle(std::vector<Interval>(static_cast<std::size_t>(k), Interval{0.0, 1.0}));
}

double KRectangle::volume() const {
  double v = 1.0;
  for (const auto& b : bounds_) v *= b.length();
  return v;
}

bool KRectangle::contains(const Eigen::VectorXd& s, double slack) const {
  if (s.size() != k()) return false;
  for (int i = 0; i < k(); ++i)
    if (s[i] < bounds_[i].lo - slack || s[i] > bounds_[i].hi + slack) return false;
  return true;
}

Eigen::VectorXd KRectangle::center() const {
  Eigen::VectorXd c(k());
  for (int i = 0; i < k(); ++i) c[i] = 0.5 * (bounds_[i].lo + bounds_[i].hi);
  return c;
}

Eigen::VectorXd Face::lift(const Eigen::VectorXd& t) const {
  const int k = static_cast<int>(profile.size()) + 1;
  if (t.size() != k - 1)
    throw DimensionMismatch("face parameter has wrong dimension");
  Eigen::VectorXd s(k);
  int j = 0;
  for (int i = 0; i < k; ++i) s[i] = (i == axis) ? pinned : t[j++];
  return s;
}

std::vector<Face> boundary_chain(const KRectangle& r) {
  std::vector<Face> faces;
  faces.reserve(static_cast<std::size_t>(2 * r.k()));
  for (int axis = 0; axis < r.k(); ++axis) {
    std::vector<Interval> profile;
    profile.reserve(static_cast<std::size_t>(r.k() - 1));
    for (int i = 0; i < r.k(); ++i)
      if (i != axis) profile.push_back(r.bound(i));
    faces.push_back(Face{axis, +1, r.bound(axis).hi, profile});
    faces.push_back(Face{axis, -1, r.bound(axis).lo, profile});
  }
  return faces;
}

void PatchMap::validate() const {
  if (ambient_dim < 1 || ambient_dim > kMaxDim)
    throw DimensionMismatch("patch ambient dimension out of range");
  if (domain.k() > ambient_dim)
    throw DimensionMismatch("patch dimension k exceeds ambient dimension");
  if (!map) throw DomainError("patch has no map");
}

Eigen::MatrixXd tangent_matrix(const PatchMap& p, const Eigen::VectorXd& s) {
  const int k = p.k();
  const int n = p.ambient_dim;
  if (s.size() != k) throw DimensionMismatch("parameter point has wrong dimension");
  if (!p.domain.contains(s, 1e-12))
    throw DomainError("parameter point outside the patch domain");
  if (p.jacobian) {
    Eigen::MatrixXd j = p.jacobian(s);
    if (j.rows() != n || j.cols() != k)
      throw DimensionMismatch("analytic jacobian has wrong shape");
    return j;
  }
  Eigen::MatrixXd j(n, k);
  Eigen::VectorXd probe = s;
  for (int axis = 0; axis < k; ++axis) {
    const Interval& b = p.domain.bound(axis);
    const double h = fdiff::step(s[axis]);
    const auto nodes = fdiff::clamped_stencil(s[axis], h, b.lo, b.hi);
    const auto w = fdiff::derivative_weights(nodes, s[axis]);
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(n);
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      probe[axis] = nodes[q];
      acc += w[q] * p.map(probe);
    }
    probe[axis] = s[axis];
    j.col(axis) = acc;
  }
  return j;
}

Multivector wedge_columns(const Eigen::MatrixXd& cols, int ambient_dim) {
  Multivector acc = Multivector::scalar(ambient_dim, 1.0);
  for (int c = 0; c < cols.cols(); ++c)
    acc = outer_product(acc, Multivector::vector(ambient_dim, cols.col(c)));
  return acc;
}

namespace {

Multivector wedge_excluding(const Eigen::MatrixXd& cols, int ambient_dim,
                            int omit) {
  Multivector acc = Multivector::scalar(ambient_dim, 1.0);
  for (int c = 0; c < cols.cols(); ++c) {
    if (c == omit) continue;
    acc = outer_product(acc, Multivector::vector(ambient_dim, cols.col(c)));
  }
  return acc;
}

void check_regular(const Eigen::MatrixXd& j, const Multivector& kvec) {
  double scale = 1.0;
  for (int c = 0; c < j.cols(); ++c) scale *= j.col(c).norm();
  if (kvec.norm() <= kRegularityEps * scale)
    throw RegularityError("tangent k-vector is numerically degenerate");
}

}  // namespace

FrameData tangent_frame(const PatchMap& p, const Eigen::VectorXd& s) {
  const int k = p.k();
  const int n = p.ambient_dim;
  const Eigen::MatrixXd j = tangent_matrix(p, s);

  FrameData f(n, k);
  f.point = p.map(s);
  if (f.point.size() != n)
    throw DimensionMismatch("patch map returned a point of wrong dimension");
  f.tangents.reserve(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c)
    f.tangents.push_back(Multivector::vector(n, j.col(c)));
  f.kvector = wedge_columns(j, n);
  check_regular(j, f.kvector);

  f.reciprocals.reserve(static_cast<std::size_t>(k));
  if (k == 1) {
    const double m2 = f.tangents[0].norm();
    f.reciprocals.push_back(f.tangents[0] / (m2 * m2));
    return f;
  }
  const Multivector inv = blade_inverse(f.kvector);
  for (int i = 0; i < k; ++i) {
    Multivector r = inner_product(wedge_excluding(j, n, i), inv);
    if (i % 2 == 1) r = -r;  // (-1)^(i-1) with 1-based i
    f.reciprocals.push_back(std::move(r));
  }
  return f;
}

FaceSample face_measure(const PatchMap& p, const Face& face,
                        const Eigen::VectorXd& t) {
  const int k = p.k();
  const int n = p.ambient_dim;
  const Eigen::VectorXd s = face.lift(t);
  FaceSample out{p.map(s), Multivector{n}};
  if (k == 1) {
    out.measure = Multivector::scalar(n, static_cast<double>(face.side));
    return out;
  }
  const Eigen::MatrixXd j = tangent_matrix(p, s);
  // side * x_(k) x^i rewritten through the contraction identity
  // x_(k) . x^i = (-1)^(k-i) x_1 ^ ... omit i ... ^ x_k  (i 1-based),
  // which needs no reciprocal frame and vanishes gracefully when the
  // omitted-axis wedge does.
  Multivector w = wedge_excluding(j, n, face.axis);
  int sign = face.side;
  if ((k - (face.axis + 1)) % 2 == 1) sign = -sign;
  out.measure = (sign > 0) ? std::move(w) : -w;
  return out;
}

FaceFrame face_frame(const PatchMap& p, const Face& face,
                     const Eigen::VectorXd& t) {
  const Eigen::VectorXd s = face.lift(t);
  FaceFrame out{tangent_frame(p, s), face_measure(p, face, t).measure};
  return out;
}

PatchComplex glue_patches(std::vector<OrientedPatch> parts) {
  if (parts.empty()) throw DomainError("a patch complex needs at least one patch");
  const int k = parts.front().patch.k();
  const int n = parts.front().patch.ambient_dim;
  for (auto& op : parts) {
    op.patch.validate();
    if (op.patch.k() != k || op.patch.ambient_dim != n)
      throw DimensionMismatch("glued patches must agree on k and ambient dimension");
    if (op.orientation != 1 && op.orientation != -1)
      throw DomainError("patch orientation must be +1 or -1");
  }
  return PatchComplex{std::move(parts)};
}

namespace {

Eigen::VectorXd face_midpoint_image(const PatchMap& p, const Face& face) {
  Eigen::VectorXd t(face.profile.size());
  for (std::size_t i = 0; i < face.profile.size(); ++i)
    t[static_cast<int>(i)] = 0.5 * (face.profile[i].lo + face.profile[i].hi);
  return p.map(face.lift(t));
}

// Midpoint-rule integral of the bare face measure, orientation included.
Multivector face_measure_integral(const PatchMap& p, const Face& face,
                                  int orientation, int samples_per_axis) {
  const int fd = static_cast<int>(face.profile.size());
  Multivector acc{p.ambient_dim};
  if (fd == 0) {
    acc += face_measure(p, face, Eigen::VectorXd(0)).measure;
    return acc * static_cast<double>(orientation);
  }
  long total = 1;
  for (int i = 0; i < fd; ++i) total *= samples_per_axis;
  Eigen::VectorXd t(fd);
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx;
    double w = 1.0;
    for (int i = 0; i < fd; ++i) {
      const int d = static_cast<int>(rest % samples_per_axis);
      rest /= samples_per_axis;
      const Interval& b = face.profile[static_cast<std::size_t>(i)];
      const double h = b.length() / samples_per_axis;
      t[i] = b.lo + (d + 0.5) * h;
      w *= h;
    }
    acc += face_measure(p, face, t).measure * w;
  }
  return acc * static_cast<double>(orientation);
}

}  // namespace

double glue_consistency_residual(const PatchComplex& c, int samples_per_axis) {
  struct Entry {
    Eigen::VectorXd mid;
    Multivector integral;
    double scale;
  };
  std::vector<Entry> entries;
  double extent = 0.0;
  for (const auto& op : c.parts) {
    for (const Face& face : boundary_chain(op.patch.domain)) {
      Multivector integral =
          face_measure_integral(op.patch, face, op.orientation, samples_per_axis);
      Eigen::VectorXd mid = face_midpoint_image(op.patch, face);
      extent = std::max(extent, mid.norm());
      entries.push_back(Entry{std::move(mid), std::move(integral), 0.0});
    }
  }
  const double match_tol = 1e-8 * std::max(1.0, extent);
  double worst = 0.0;
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      if ((entries[a].mid - entries[b].mid).norm() > match_tol) continue;
      const double r = (entries[a].integral + entries[b].integral).norm();
      const double scale = std::max(entries[a].integral.norm(),
                                    entries[b].integral.norm());
      if (scale == 0.0) continue;
      worst = std::max(worst, r / std::max(1.0, scale));
    }
  }
  return worst;
}

}  // namespace gcalc
