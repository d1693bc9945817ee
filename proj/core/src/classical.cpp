#include "gcalc/classical.hpp"

#include <algorithm>
#include <cmath>

namespace gcalc {
namespace {

void require_vector_field(const FieldFn& f, const PatchMap& p) {
  Multivector probe = f(p.map(p.domain.center()));
  if (!probe.is_homogeneous(1))
    throw DomainError("classical checks expect a vector-valued field");
}

double box_scalar(const PatchMap& p, const QuadratureSpec& spec,
                  const std::function<double(const Eigen::VectorXd&)>& fn) {
  Multivector r = integrate_box(
      p.domain, spec, p.ambient_dim,
      [&](const Eigen::VectorXd& s, double w, Multivector& acc) {
        acc[0] += w * fn(s);
      });
  return r.scalar_part();
}

double faces_scalar(const PatchMap& p, const QuadratureSpec& spec,
                    const std::function<double(const FaceSample&)>& fn) {
  double total = 0.0;
  for (const Face& face : boundary_chain(p.domain)) {
    Multivector r = integrate_profile(
        face.profile, spec, p.ambient_dim,
        [&](const Eigen::VectorXd& t, double w, Multivector& acc) {
          acc[0] += w * fn(face_measure(p, face, t));
        });
    total += r.scalar_part();
  }
  return total;
}

long direct_nodes(const QuadratureSpec& spec, int k) {
  return node_count(spec, k) + 2L * k * node_count(spec, k - 1);
}

}  // namespace

PathIndependenceReport path_independence_check(const FieldFn& f,
                                               const PatchMap& first,
                                               const PatchMap& second,
                                               const QuadratureSpec& spec,
                                               DerivMode mode) {
  first.validate();
  second.validate();
  f.validate();
  spec.validate();
  if (first.k() != 1 || second.k() != 1)
    throw DimensionMismatch("path independence needs two curves");
  if (first.ambient_dim != second.ambient_dim ||
      f.ambient_dim != first.ambient_dim)
    throw DimensionMismatch("curves and field must share the ambient space");

  auto endpoint = [](const PatchMap& c, bool upper) {
    Eigen::VectorXd s(1);
    s[0] = upper ? c.domain.bound(0).hi : c.domain.bound(0).lo;
    return c.map(s);
  };
  Eigen::VectorXd a1 = endpoint(first, false);
  Eigen::VectorXd b1 = endpoint(first, true);
  Eigen::VectorXd a2 = endpoint(second, false);
  Eigen::VectorXd b2 = endpoint(second, true);
  auto matches = [](const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    return (u - v).lpNorm<Eigen::Infinity>() <=
           kEndpointTol * std::max(1.0, u.lpNorm<Eigen::Infinity>());
  };
  if (!matches(a1, a2) || !matches(b1, b2))
    throw EndpointMismatch("curves do not share endpoints");

  const int n = f.ambient_dim;
  FieldFn one = one_field(n);
  auto grad_integral = [&](const PatchMap& c) {
    return integrate_box(
        c.domain, spec, n,
        [&](const Eigen::VectorXd& s, double w, Multivector& acc) {
          Multivector t = ftc_volume_integrand(one, f, c, s, mode);
          t *= w;
          acc += t;
        });
  };
  Multivector i1 = grad_integral(first);
  Multivector i2 = grad_integral(second);
  Multivector diff = f(b1) - f(a1);

  PathIndependenceReport r{i1,
                           i2,
                           diff,
                           (i1 - i2).inf_norm(),
                           std::max(relative_residual(i1, diff),
                                    relative_residual(i2, diff)),
                           2 * node_count(spec, 1)};
  return r;
}

GreenReport greens_theorem_check(const FieldFn& f, const PatchMap& region,
                                 const QuadratureSpec& spec, DerivMode mode) {
  region.validate();
  f.validate();
  spec.validate();
  if (region.ambient_dim != 2 || region.k() != 2)
    throw DimensionMismatch("Green's theorem needs a 2-patch in the plane");
  if (f.ambient_dim != 2)
    throw DimensionMismatch("field is not planar");
  require_vector_field(f, region);

  GreenReport rep{ftc_check(one_field(2), f, region, spec, 1, mode)};

  // Both direct area integrands share one accumulator pass: the curl lands
  // in the scalar slot, the divergence in the e12 slot.
  constexpr BladeIndex kE1 = 1, kE2 = 2, kE12 = 3;
  Multivector area = integrate_box(
      region.domain, spec, 2,
      [&](const Eigen::VectorXd& s, double w, Multivector& acc) {
        Eigen::MatrixXd jac = tangent_matrix(region, s);
        Eigen::VectorXd x = region.map(s);
        Multivector d1 = field_directional(f, x, Eigen::VectorXd::Unit(2, 0), mode);
        Multivector d2 = field_directional(f, x, Eigen::VectorXd::Unit(2, 1), mode);
        double det = jac.determinant();
        acc[0] += w * (d1[kE2] - d2[kE1]) * det;
        acc[kE12] += w * (d1[kE1] + d2[kE2]) * det;
      });
  rep.curl_area_integral = area.scalar_part();
  rep.divergence_area_integral = area[kE12];

  Multivector iinv = pseudoscalar_inverse(2);
  Multivector line{2};
  for (const Face& face : boundary_chain(region.domain)) {
    line += integrate_profile(
        face.profile, spec, 2,
        [&](const Eigen::VectorXd& t, double w, Multivector& acc) {
          FaceSample fs = face_measure(region, face, t);
          Eigen::VectorXd fv = f(fs.point).vector_part();
          acc[0] += w * fs.measure.vector_part().dot(fv);
          acc[kE12] += w * (iinv * fs.measure).vector_part().dot(fv);
        });
  }
  // The induced boundary runs clockwise; counterclockwise flips the sign.
  rep.circulation_ccw = -line.scalar_part();
  rep.flux_outward = line[kE12];

  rep.circulation_residual =
      std::abs(rep.circulation_ccw - rep.curl_area_integral);
  rep.flux_residual = std::abs(rep.flux_outward - rep.divergence_area_integral);

  double gap = std::abs(-rep.ftc.rhs.scalar_part() - rep.circulation_ccw);
  gap = std::max(gap, std::abs(rep.ftc.rhs[kE12] - rep.flux_outward));
  gap = std::max(gap,
                 std::abs(-rep.ftc.lhs.scalar_part() - rep.curl_area_integral));
  gap = std::max(gap, std::abs(rep.ftc.lhs[kE12] -
                               rep.divergence_area_integral));
  rep.extraction_gap = gap;
  rep.offgrade_norm = std::max(rep.ftc.lhs.grade(1).inf_norm(),
                               rep.ftc.rhs.grade(1).inf_norm());
  rep.nodes = rep.ftc.table.front().nodes + direct_nodes(spec, 2);
  return rep;
}

StokesReport stokes_theorem_check(const FieldFn& f, const PatchMap& surface,
                                  const QuadratureSpec& spec, DerivMode mode) {
  surface.validate();
  f.validate();
  spec.validate();
  if (surface.ambient_dim != 3 || surface.k() != 2)
    throw DimensionMismatch("Stokes' theorem needs a 2-surface in R^3");
  if (f.ambient_dim != 3)
    throw DimensionMismatch("field does not live in R^3");
  require_vector_field(f, surface);

  StokesReport rep{ftc_check(one_field(3), f, surface, spec, 1, mode)};

  Multivector I = pseudoscalar(3);
  rep.curl_flux = box_scalar(surface, spec, [&](const Eigen::VectorXd& s) {
    Eigen::MatrixXd jac = tangent_matrix(surface, s);
    Eigen::VectorXd x = surface.map(s);
    // I x_(2) is the unit normal times the area element.
    Eigen::VectorXd ndA = (I * wedge_columns(jac, 3)).vector_part();
    Multivector d = flat_vector_derivative(f, x, mode);
    Eigen::VectorXd curl = (-(I * d.grade(2))).vector_part();
    return ndA.dot(curl);
  });

  rep.circulation = faces_scalar(surface, spec, [&](const FaceSample& fs) {
    return fs.measure.vector_part().dot(f(fs.point).vector_part());
  });

  rep.scalar_residual = std::abs(rep.circulation - rep.curl_flux);
  rep.extraction_gap =
      std::max(std::abs(rep.ftc.rhs.scalar_part() - rep.circulation),
               std::abs(rep.ftc.lhs.scalar_part() - rep.curl_flux));
  rep.nodes = rep.ftc.table.front().nodes + direct_nodes(spec, 2);
  return rep;
}

GaussReport gauss_divergence_check(const FieldFn& f, const PatchMap& volume,
                                   const QuadratureSpec& spec, DerivMode mode) {
  volume.validate();
  f.validate();
  spec.validate();
  const int n = volume.ambient_dim;
  if (volume.k() != n)
    throw DimensionMismatch("the divergence theorem needs a full-dimensional volume");
  if (f.ambient_dim != n)
    throw DimensionMismatch("field and volume dimensions differ");
  require_vector_field(f, volume);

  GaussReport rep{ftc_check(one_field(n), f, volume, spec, 1, mode)};

  rep.divergence_integral =
      box_scalar(volume, spec, [&](const Eigen::VectorXd& s) {
        Eigen::MatrixXd jac = tangent_matrix(volume, s);
        Eigen::VectorXd x = volume.map(s);
        double div = 0.0;
        for (int i = 0; i < n; ++i) {
          Multivector di =
              field_directional(f, x, Eigen::VectorXd::Unit(n, i), mode);
          div += di[BladeIndex{1} << i];
        }
        return div * jac.determinant();
      });

  Multivector iinv = pseudoscalar_inverse(n);
  rep.flux = faces_scalar(volume, spec, [&](const FaceSample& fs) {
    // I^-1 times the face measure is the outward normal times the area
    // element, so no normalization is needed.
    return (iinv * fs.measure).vector_part().dot(f(fs.point).vector_part());
  });

  rep.scalar_residual = std::abs(rep.divergence_integral - rep.flux);
  const BladeIndex full = (BladeIndex{1} << n) - 1;
  rep.extraction_gap =
      std::max(std::abs(rep.ftc.lhs[full] - rep.divergence_integral),
               std::abs(rep.ftc.rhs[full] - rep.flux));
  rep.nodes = rep.ftc.table.front().nodes + direct_nodes(spec, n);
  return rep;
}

}  // namespace gcalc
