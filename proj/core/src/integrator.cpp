#include "gcalc/integrator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace gcalc {
namespace {

void check_compatible(const FieldFn& g, const PatchMap& p, const FieldFn& f) {
  p.validate();
  g.validate();
  f.validate();
  if (g.ambient_dim != p.ambient_dim || f.ambient_dim != p.ambient_dim)
    throw DimensionMismatch("field and patch ambient dimensions differ");
}

Multivector directed_value(const FieldFn& g, const PatchMap& p,
                           const FieldFn& f, const QuadratureSpec& spec) {
  const int n = p.ambient_dim;
  return integrate_box(
      p.domain, spec, n,
      [&](const Eigen::VectorXd& s, double w, Multivector& acc) {
        Eigen::VectorXd x = p.map(s);
        Multivector kv = wedge_columns(tangent_matrix(p, s), n);
        Multivector gk = g(x) * kv;
        geometric_product_acc(gk, f(x), acc, w);
      });
}

/// Sum over the 2k faces.  For k = 1 each face profile is empty, so
/// integrate_profile degenerates to one node of weight 1 and the result is
/// the exact endpoint difference g(x(b)) f(x(b)) - g(x(a)) f(x(a)).
Multivector boundary_value(const FieldFn& g, const PatchMap& p,
                           const FieldFn& f, const QuadratureSpec& spec) {
  const int n = p.ambient_dim;
  Multivector total{n};
  for (const Face& face : boundary_chain(p.domain)) {
    total += integrate_profile(
        face.profile, spec, n,
        [&](const Eigen::VectorXd& t, double w, Multivector& acc) {
          FaceSample fs = face_measure(p, face, t);
          Multivector gm = g(fs.point) * fs.measure;
          geometric_product_acc(gm, f(fs.point), acc, w);
        });
  }
  return total;
}

Multivector volume_side(const FieldFn& g, const FieldFn& f, const PatchMap& p,
                        const QuadratureSpec& spec, DerivMode mode) {
  const int n = p.ambient_dim;
  return integrate_box(
      p.domain, spec, n,
      [&](const Eigen::VectorXd& s, double w, Multivector& acc) {
        Multivector t = ftc_volume_integrand(g, f, p, s, mode);
        t *= w;
        acc += t;
      });
}

long boundary_nodes(const QuadratureSpec& spec, int k) {
  return 2L * k * node_count(spec, k - 1);
}

template <typename Value>
IntegralResult with_estimate(const QuadratureSpec& spec, int dims,
                             const Value& value_at) {
  spec.validate();
  IntegralResult r{value_at(spec), node_count(spec, dims), std::nullopt};
  if (spec.estimate_error) {
    QuadratureSpec fine = spec.refined(2);
    Multivector v2 = value_at(fine);
    r.est_error = (v2 - r.value).inf_norm();
    r.node_count += node_count(fine, dims);
  }
  return r;
}

PatchComplex as_complex(const PatchMap& p) {
  return PatchComplex{{OrientedPatch{p, +1}}};
}

}  // namespace

IntegralResult directed_integral(const FieldFn& g, const PatchMap& p,
                                 const FieldFn& f, const QuadratureSpec& spec) {
  check_compatible(g, p, f);
  return with_estimate(spec, p.k(), [&](const QuadratureSpec& q) {
    return directed_value(g, p, f, q);
  });
}

IntegralResult directed_integral(const FieldFn& g, const PatchComplex& c,
                                 const FieldFn& f, const QuadratureSpec& spec) {
  for (const OrientedPatch& part : c.parts) check_compatible(g, part.patch, f);
  return with_estimate(spec, c.k(), [&](const QuadratureSpec& q) {
    Multivector total{c.ambient_dim()};
    for (const OrientedPatch& part : c.parts) {
      Multivector v = directed_value(g, part.patch, f, q);
      v *= static_cast<double>(part.orientation);
      total += v;
    }
    return total;
  });
}

IntegralResult boundary_integral(const FieldFn& g, const PatchMap& p,
                                 const FieldFn& f, const QuadratureSpec& spec) {
  check_compatible(g, p, f);
  spec.validate();
  IntegralResult r{boundary_value(g, p, f, spec),
                   boundary_nodes(spec, p.k()), std::nullopt};
  if (spec.estimate_error) {
    if (p.k() == 1) {
      r.est_error = 0.0;  // endpoint formula, no quadrature error
    } else {
      QuadratureSpec fine = spec.refined(2);
      Multivector v2 = boundary_value(g, p, f, fine);
      r.est_error = (v2 - r.value).inf_norm();
      r.node_count += boundary_nodes(fine, p.k());
    }
  }
  return r;
}

IntegralResult boundary_integral(const FieldFn& g, const PatchComplex& c,
                                 const FieldFn& f, const QuadratureSpec& spec) {
  for (const OrientedPatch& part : c.parts) check_compatible(g, part.patch, f);
  spec.validate();
  Multivector total{c.ambient_dim()};
  long nodes = 0;
  for (const OrientedPatch& part : c.parts) {
    Multivector v = boundary_value(g, part.patch, f, spec);
    v *= static_cast<double>(part.orientation);
    total += v;
    nodes += boundary_nodes(spec, part.patch.k());
  }
  return IntegralResult{std::move(total), nodes, std::nullopt};
}

IntegralResult directed_content(const PatchMap& p, const QuadratureSpec& spec) {
  FieldFn one = one_field(p.ambient_dim);
  return directed_integral(one, p, one, spec);
}

IntegralResult directed_content(const PatchComplex& c,
                                const QuadratureSpec& spec) {
  FieldFn one = one_field(c.ambient_dim());
  return directed_integral(one, c, one, spec);
}

IntegralResult boundary_content(const PatchMap& p, const QuadratureSpec& spec) {
  FieldFn one = one_field(p.ambient_dim);
  return boundary_integral(one, p, one, spec);
}

IntegralResult boundary_content(const PatchComplex& c,
                                const QuadratureSpec& spec) {
  FieldFn one = one_field(c.ambient_dim());
  return boundary_integral(one, c, one, spec);
}

double relative_residual(const Multivector& lhs, const Multivector& rhs) {
  return (lhs - rhs).inf_norm() / std::max(1.0, rhs.inf_norm());
}

FtcReport ftc_check(const FieldFn& g, const FieldFn& f, const PatchMap& p,
                    const QuadratureSpec& spec, int refinements,
                    DerivMode mode) {
  return ftc_check(g, f, as_complex(p), spec, refinements, mode);
}

FtcReport ftc_check(const FieldFn& g, const FieldFn& f, const PatchComplex& c,
                    const QuadratureSpec& spec, int refinements,
                    DerivMode mode) {
  for (const OrientedPatch& part : c.parts) check_compatible(g, part.patch, f);
  spec.validate();
  if (refinements < 1)
    throw DomainError("ftc_check needs at least one refinement row");

  const int n = c.ambient_dim();
  const int k = c.k();
  std::vector<FtcRow> table;
  Multivector lhs0{n};
  Multivector rhs0{n};

  for (int level = 0; level < refinements; ++level) {
    QuadratureSpec rs = spec.refined(1 << level);
    auto t0 = std::chrono::steady_clock::now();
    Multivector lhs{n};
    Multivector rhs{n};
    long nodes = 0;
    for (const OrientedPatch& part : c.parts) {
      double w = static_cast<double>(part.orientation);
      Multivector lv = volume_side(g, f, part.patch, rs, mode);
      lv *= w;
      lhs += lv;
      Multivector rv = boundary_value(g, part.patch, f, rs);
      rv *= w;
      rhs += rv;
      nodes += node_count(rs, k) + boundary_nodes(rs, k);
    }
    auto t1 = std::chrono::steady_clock::now();

    FtcRow row;
    row.points = rs.points;
    row.subdivisions = rs.subdivisions;
    row.lhs_norm = lhs.inf_norm();
    row.rhs_norm = rhs.inf_norm();
    row.abs_residual = (lhs - rhs).inf_norm();
    row.rel_residual = row.abs_residual / std::max(1.0, row.rhs_norm);
    row.nodes = nodes;
    row.wall_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    table.push_back(row);

    if (level == 0) {
      lhs0 = lhs;
      rhs0 = rhs;
    }
  }

  FtcReport report{std::move(lhs0), std::move(rhs0), table.front().abs_residual,
                   table.front().rel_residual, std::move(table)};
  return report;
}

}  // namespace gcalc
