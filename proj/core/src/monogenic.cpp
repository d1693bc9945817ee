#include "gcalc/monogenic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace gcalc {
namespace {

Multivector cauchy_prefactor(const Multivector& integral, int n) {
  Multivector v = pseudoscalar_inverse(n) * integral;
  v *= (((n - 1) % 2 == 0) ? 1.0 : -1.0) / unit_sphere_area(n);
  return v;
}

/// Width of one quadrature cell in the ambient metric, estimated from the
/// tangent lengths at the domain center.
double ambient_cell_width(const PatchMap& p, const QuadratureSpec& spec) {
  Eigen::MatrixXd jac = tangent_matrix(p, p.domain.center());
  double w = 0.0;
  for (int i = 0; i < p.k(); ++i) {
    double cell = p.domain.bound(i).length() / spec.subdivisions;
    w = std::max(w, cell * jac.col(i).norm());
  }
  return w;
}

/// Typical spacing between neighbouring quadrature nodes, the length scale
/// the rule can actually resolve.
double ambient_node_spacing(const PatchMap& p, const QuadratureSpec& spec) {
  return ambient_cell_width(p, spec) / spec.points;
}

/// Quintic smoothstep from 0 (r <= r0/2) to 1 (r >= r0), C^2 throughout, so
/// the faded kernel stays a smooth integrand with feature scale r0/2.
double fade_in(double r, double r0) {
  if (r <= 0.5 * r0) return 0.0;
  if (r >= r0) return 1.0;
  const double t = 2.0 * r / r0 - 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

void for_grid(const KRectangle& box, int per_axis,
              const std::function<void(const Eigen::VectorXd&)>& fn) {
  const int k = box.k();
  std::vector<int> idx(k, 0);
  Eigen::VectorXd s(k);
  while (true) {
    for (int i = 0; i < k; ++i) {
      const Interval& b = box.bound(i);
      s[i] = per_axis == 1
                 ? 0.5 * (b.lo + b.hi)
                 : b.lo + b.length() * idx[i] / (per_axis - 1);
    }
    fn(s);
    int axis = 0;
    while (axis < k && ++idx[axis] == per_axis) idx[axis++] = 0;
    if (axis == k) break;
  }
}

int grid_density(int k) { return k <= 3 ? 9 : (k <= 5 ? 5 : 3); }

double boundary_distance_estimate(const PatchComplex& boundary,
                                  const Eigen::VectorXd& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const OrientedPatch& part : boundary.parts) {
    for_grid(part.patch.domain, grid_density(part.patch.k()),
             [&](const Eigen::VectorXd& s) {
               best = std::min(best, (part.patch.map(s) - x).norm());
             });
  }
  return best;
}

}  // namespace

double unit_sphere_area(int n) {
  if (n < 1 || n > kMaxDim)
    throw DimensionMismatch("sphere dimension out of range");
  return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
}

MonogenicityReport monogenicity_certificate(const FieldFn& f,
                                            const KRectangle& box,
                                            const SampleSpec& sample,
                                            DerivMode mode) {
  f.validate();
  if (box.k() != f.ambient_dim)
    throw DimensionMismatch("sample box dimension does not match the field");
  if (sample.count < 1) throw DomainError("sample count must be positive");

  bool analytic =
      mode == DerivMode::automatic && f.has_analytic_derivative();
  MonogenicityReport rep;
  rep.tolerance = analytic ? kMonogenicTolAnalytic : kMonogenicTolFd;

  std::mt19937_64 rng(sample.seed);
  std::vector<std::uniform_real_distribution<double>> axis;
  axis.reserve(box.k());
  for (int i = 0; i < box.k(); ++i)
    axis.emplace_back(box.bound(i).lo, box.bound(i).hi);

  Eigen::VectorXd x(box.k());
  long attempts = 0;
  while (rep.samples < sample.count) {
    if (++attempts > 1000 * sample.count)
      throw DomainError("sample box is dominated by the excluded region");
    for (int i = 0; i < box.k(); ++i) x[i] = axis[i](rng);
    if (f.singularity &&
        (x - *f.singularity).norm() < sample.exclusion_radius)
      continue;
    rep.max_residual = std::max(
        rep.max_residual, flat_vector_derivative(f, x, mode).inf_norm());
    ++rep.samples;
  }
  rep.monogenic = rep.max_residual <= rep.tolerance;
  return rep;
}

CauchyReport cauchy_reconstruct(const FieldFn& f, const PatchComplex& boundary,
                                const Eigen::VectorXd& xprime,
                                const QuadratureSpec& spec) {
  f.validate();
  spec.validate();
  const int n = boundary.ambient_dim();
  if (n < 2)
    throw DomainError("reconstruction needs an ambient dimension of at least 2");
  if (boundary.k() != n - 1)
    throw DomainError("boundary patches must have dimension n - 1");
  if (f.ambient_dim != n)
    throw DimensionMismatch("field and boundary dimensions differ");
  if (xprime.size() != n)
    throw DimensionMismatch("reconstruction point has the wrong dimension");

  FieldFn kern = cauchy_kernel_field(n, xprime);
  IntegralResult ir = directed_integral(kern, boundary, f, spec);

  CauchyReport rep{cauchy_prefactor(ir.value, n), f(xprime)};
  rep.abs_err = (rep.reconstructed - rep.direct).inf_norm();
  rep.boundary_distance = boundary_distance_estimate(boundary, xprime);
  double spacing = 0.0;
  for (const OrientedPatch& part : boundary.parts)
    spacing = std::max(spacing, ambient_node_spacing(part.patch, spec));
  rep.margin = kBoundaryMarginCells * spacing;
  rep.near_boundary = rep.boundary_distance < rep.margin;
  rep.nodes = ir.node_count;
  return rep;
}

CauchyReport cauchy_reconstruct(const FieldFn& f, const PatchMap& boundary,
                                const Eigen::VectorXd& xprime,
                                const QuadratureSpec& spec) {
  return cauchy_reconstruct(f, PatchComplex{{OrientedPatch{boundary, +1}}},
                            xprime, spec);
}

FullCauchyReport full_cauchy_formula(const FieldFn& f, const PatchMap& volume,
                                     const Eigen::VectorXd& xprime,
                                     const QuadratureSpec& spec,
                                     DerivMode mode) {
  f.validate();
  volume.validate();
  spec.validate();
  const int n = volume.ambient_dim;
  if (n < 2)
    throw DomainError("the formula needs an ambient dimension of at least 2");
  if (volume.k() != n)
    throw DomainError("the volume correction needs a full-dimensional patch");
  if (f.ambient_dim != n)
    throw DimensionMismatch("field and volume dimensions differ");
  if (xprime.size() != n)
    throw DimensionMismatch("evaluation point has the wrong dimension");

  FieldFn kern = cauchy_kernel_field(n, xprime);
  const double r0 = kExclusionCells * ambient_cell_width(volume, spec);

  Multivector boundary{n};
  for (const Face& face : boundary_chain(volume.domain)) {
    boundary += integrate_profile(
        face.profile, spec, n,
        [&](const Eigen::VectorXd& t, double w, Multivector& acc) {
          FaceSample fs = face_measure(volume, face, t);
          Multivector km = kern(fs.point) * fs.measure;
          geometric_product_acc(km, f(fs.point), acc, w);
        });
  }

  Multivector correction = integrate_box(
      volume.domain, spec, n,
      [&](const Eigen::VectorXd& s, double w, Multivector& acc) {
        Eigen::VectorXd y = volume.map(s);
        const double eta = fade_in((y - xprime).norm(), r0);
        if (eta == 0.0) return;
        Multivector kv =
            kern(y) * wedge_columns(tangent_matrix(volume, s), n);
        geometric_product_acc(kv, flat_vector_derivative(f, y, mode), acc,
                              w * eta);
      });

  FullCauchyReport rep{cauchy_prefactor(boundary - correction, n), f(xprime)};
  rep.abs_err = (rep.reconstructed - rep.direct).inf_norm();
  rep.excluded_radius = r0;

  double dmax = 0.0;
  for_grid(volume.domain, 4, [&](const Eigen::VectorXd& s) {
    dmax = std::max(dmax,
                    flat_vector_derivative(f, volume.map(s), mode).inf_norm());
  });
  rep.excluded_error_bound = r0 * dmax;
  rep.nodes = node_count(spec, n) + 2L * n * node_count(spec, n - 1);
  return rep;
}

}  // namespace gcalc
