#include "gcalc/derivative.hpp"

#include <cmath>
#include <random>

#include "gcalc/fdiff.hpp"

namespace gcalc {

namespace {

bool use_analytic(const FieldFn& f, DerivMode mode) {
  return mode == DerivMode::automatic && f.has_analytic_derivative();
}

// Central 4th-order stencil along t -> f(x + t v) at t = 0, unbounded domain.
Multivector fd_directional(const FieldFn& f, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& v) {
  const double h = fdiff::step(x.norm());
  Multivector acc{f.ambient_dim};
  static const double w[4] = {1.0, -8.0, 8.0, -1.0};
  static const double t[4] = {-2.0, -1.0, 1.0, 2.0};
  for (int q = 0; q < 4; ++q)
    acc += f.eval(x + (t[q] * h) * v) * (w[q] / (12.0 * h));
  return acc;
}

// d/ds^axis of s -> field(p.map(s)), stencil clamped inside the domain.
Multivector fd_composite_axis(const FieldFn& f, const PatchMap& p,
                              const Eigen::VectorXd& s, int axis) {
  const Interval& b = p.domain.bound(axis);
  const double h = fdiff::step(s[axis]);
  const auto nodes = fdiff::clamped_stencil(s[axis], h, b.lo, b.hi);
  const auto w = fdiff::derivative_weights(nodes, s[axis]);
  Multivector acc{f.ambient_dim};
  Eigen::VectorXd probe = s;
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    probe[axis] = nodes[q];
    acc += f.eval(p.map(probe)) * w[q];
  }
  return acc;
}

// Derivative of the composite field along parameter axis `axis`.
Multivector composite_axis_derivative(const FieldFn& f, const PatchMap& p,
                                      const Eigen::VectorXd& s,
                                      const Eigen::MatrixXd& jac, int axis,
                                      DerivMode mode) {
  if (use_analytic(f, mode))
    return f.deriv(p.map(s), Eigen::VectorXd(jac.col(axis)));
  return fd_composite_axis(f, p, s, axis);
}

Multivector wedge_excluding_axis(const Eigen::MatrixXd& cols, int dim,
                                 int omit) {
  Multivector acc = Multivector::scalar(dim, 1.0);
  for (int c = 0; c < cols.cols(); ++c) {
    if (c == omit) continue;
    acc = outer_product(acc, Multivector::vector(dim, cols.col(c)));
  }
  return acc;
}

}  // namespace

Multivector field_directional(const FieldFn& f, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& v, DerivMode mode) {
  f.validate();
  if (x.size() != f.ambient_dim || v.size() != f.ambient_dim)
    throw DimensionMismatch("point or direction has wrong dimension");
  if (use_analytic(f, mode)) return f.deriv(x, v);
  return fd_directional(f, x, v);
}

Multivector flat_vector_derivative(const FieldFn& f, const Eigen::VectorXd& x,
                                   DerivMode mode) {
  f.validate();
  const int n = f.ambient_dim;
  if (x.size() != n) throw DimensionMismatch("point has wrong dimension");
  Multivector acc{n};
  Eigen::VectorXd dir = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    dir[i] = 1.0;
    const Multivector partial = use_analytic(f, mode)
                                    ? f.deriv(x, dir)
                                    : fd_directional(f, x, dir);
    geometric_product_acc(Multivector::basis_vector(n, i + 1), partial, acc);
    dir[i] = 0.0;
  }
  return acc;
}

TwoSidedResult two_sided_derivative(const FieldFn& g, const FieldFn& f,
                                    const PatchMap& p, const Eigen::VectorXd& s,
                                    DerivMode mode) {
  g.validate();
  f.validate();
  p.validate();
  const int n = p.ambient_dim;
  if (g.ambient_dim != n || f.ambient_dim != n)
    throw DimensionMismatch("fields and patch disagree on the ambient dimension");

  const FrameData frame = tangent_frame(p, s);
  const Eigen::MatrixXd jac = tangent_matrix(p, s);
  const Multivector gv = g.eval(frame.point);
  const Multivector fv = f.eval(frame.point);

  TwoSidedResult out{Multivector{n}, {}};
  out.per_axis.reserve(static_cast<std::size_t>(p.k()));
  for (int i = 0; i < p.k(); ++i) {
    const Multivector dg = composite_axis_derivative(g, p, s, jac, i, mode);
    const Multivector df = composite_axis_derivative(f, p, s, jac, i, mode);
    Multivector term = dg * frame.reciprocals[static_cast<std::size_t>(i)] * fv;
    geometric_product_acc(gv * frame.reciprocals[static_cast<std::size_t>(i)],
                          df, term);
    out.value += term;
    out.per_axis.push_back(std::move(term));
  }
  return out;
}

Multivector ftc_volume_integrand(const FieldFn& g, const FieldFn& f,
                                 const PatchMap& p, const Eigen::VectorXd& s,
                                 DerivMode mode) {
  const int n = p.ambient_dim;
  const int k = p.k();
  const Eigen::MatrixXd jac = tangent_matrix(p, s);
  const Eigen::VectorXd x = p.map(s);
  const Multivector gv = g.eval(x);
  const Multivector fv = f.eval(x);

  Multivector acc{n};
  for (int i = 0; i < k; ++i) {
    Multivector mid = wedge_excluding_axis(jac, n, i);
    if ((k - (i + 1)) % 2 == 1) mid = -mid;
    const Multivector dg = composite_axis_derivative(g, p, s, jac, i, mode);
    const Multivector df = composite_axis_derivative(f, p, s, jac, i, mode);
    geometric_product_acc(dg * mid, fv, acc);
    geometric_product_acc(gv * mid, df, acc);
  }
  return acc;
}

double frame_lemma_residual(const PatchMap& p, const Eigen::VectorXd& s,
                            int j) {
  p.validate();
  const int k = p.k();
  const int n = p.ambient_dim;
  if (j < 1 || j > k) throw DomainError("lemma grade j must be in [1, k]");

  // C_i(s) = (x_1 ^ ... ^ x_j) . x^i with the whole frame varying.
  const auto composite = [&](int axis, const Eigen::VectorXd& at) {
    const FrameData fr = tangent_frame(p, at);
    Multivector w = Multivector::scalar(n, 1.0);
    for (int c = 0; c < j; ++c)
      w = outer_product(w, fr.tangents[static_cast<std::size_t>(c)]);
    return inner_product(w, fr.reciprocals[static_cast<std::size_t>(axis)]);
  };

  Multivector sum{n};
  for (int i = 0; i < j; ++i) {
    const Interval& b = p.domain.bound(i);
    const double h = fdiff::step(s[i]);
    const auto nodes = fdiff::clamped_stencil(s[i], h, b.lo, b.hi);
    const auto w = fdiff::derivative_weights(nodes, s[i]);
    Eigen::VectorXd probe = s;
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      probe[i] = nodes[q];
      sum += composite(i, probe) * w[q];
    }
  }
  return sum.norm();
}

namespace {

struct IdentityField {
  FieldFn field;
  std::function<Multivector(const Eigen::VectorXd&)> expected;
};

FieldFn strip_analytic(FieldFn f, DerivMode mode) {
  if (mode == DerivMode::force_fd) f.deriv = nullptr;
  return f;
}

double rel_err(const Multivector& got, const Multivector& want) {
  return (got - want).inf_norm() / std::max(1.0, want.inf_norm());
}

}  // namespace

std::vector<IdentityRow> identity_suite(int dim, long trials,
                                        std::uint64_t seed, DerivMode mode) {
  Signature{dim};  // validates the dimension
  const int n = dim;

  // Scalar-valued helper fields built from |x|.
  const auto power_field = [n](double k) {
    FieldFn f;
    f.ambient_dim = n;
    f.eval = [n, k](const Eigen::VectorXd& x) {
      return Multivector::scalar(n, std::pow(x.norm(), k));
    };
    f.deriv = [n, k](const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
      const double r = x.norm();
      return Multivector::scalar(n, k * std::pow(r, k - 2.0) * x.dot(v));
    };
    f.name = "radial_power";
    return f;
  };
  const auto shell_field = [n](double k) {
    FieldFn f;
    f.ambient_dim = n;
    f.eval = [n, k](const Eigen::VectorXd& x) {
      return Multivector::vector(n,
                                 Eigen::VectorXd(x / std::pow(x.norm(), k)));
    };
    f.deriv = [n, k](const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
      const double rk = std::pow(x.norm(), k);
      const Eigen::VectorXd g =
          v / rk - x * (k * x.dot(v) / (rk * x.squaredNorm()));
      return Multivector::vector(n, g);
    };
    f.name = "shell";
    return f;
  };

  std::vector<IdentityRow> rows;
  rows.reserve(7);

  const auto run = [&](int id,
                       const std::function<double(const Eigen::VectorXd&)>& probe) {
    IdentityRow row{id, trials, 0.0, 0.0};
    std::mt19937_64 local(seed + static_cast<std::uint64_t>(id));
    std::uniform_real_distribution<double> c2(-2.0, 2.0);
    const auto draw = [&]() {
      Eigen::VectorXd x(n);
      for (;;) {
        for (int i = 0; i < n; ++i) x[i] = c2(local);
        if (x.norm() >= 0.1) return x;
      }
    };
    double sum = 0.0;
    for (long t = 0; t < trials; ++t) {
      const double e = probe(draw());
      row.max_rel_err = std::max(row.max_rel_err, e);
      sum += e;
    }
    row.mean_rel_err = trials > 0 ? sum / static_cast<double>(trials) : 0.0;
    rows.push_back(row);
  };

  // (1) del . x = n and del ^ x = 0.
  {
    const FieldFn f = strip_analytic(identity_field(n), mode);
    run(1, [&](const Eigen::VectorXd& x) {
      const Multivector d = flat_vector_derivative(f, x, mode);
      const double e0 =
          std::abs(d.scalar_part() - n) / std::max(1.0, static_cast<double>(n));
      const double e2 = d.grade(2).inf_norm();
      return std::max(e0, e2);
    });
  }
  // (2) a . del x = a and del (x . a) = a for a random vector a.
  {
    std::mt19937_64 arng(seed ^ 0x5eedu);
    std::uniform_real_distribution<double> ac(-2.0, 2.0);
    Eigen::VectorXd a(n);
    for (int i = 0; i < n; ++i) a[i] = ac(arng);
    const Multivector amv = Multivector::vector(n, a);

    FieldFn dot_a;
    dot_a.ambient_dim = n;
    dot_a.eval = [n, a](const Eigen::VectorXd& x) {
      return Multivector::scalar(n, a.dot(x));
    };
    dot_a.deriv = [n, a](const Eigen::VectorXd&, const Eigen::VectorXd& v) {
      return Multivector::scalar(n, a.dot(v));
    };
    const FieldFn fx = strip_analytic(identity_field(n), mode);
    const FieldFn fd = strip_analytic(dot_a, mode);
    run(2, [&](const Eigen::VectorXd& x) {
      const double e1 = rel_err(field_directional(fx, x, a, mode), amv);
      const double e2 = rel_err(flat_vector_derivative(fd, x, mode), amv);
      return std::max(e1, e2);
    });
  }
  // (3) del x^2 = 2x.
  {
    const FieldFn f = strip_analytic(power_field(2.0), mode);
    run(3, [&](const Eigen::VectorXd& x) {
      return rel_err(flat_vector_derivative(f, x, mode),
                     Multivector::vector(n, Eigen::VectorXd(2.0 * x)));
    });
  }
  // (4) del |x| = x/|x|.
  {
    const FieldFn f = strip_analytic(power_field(1.0), mode);
    run(4, [&](const Eigen::VectorXd& x) {
      return rel_err(flat_vector_derivative(f, x, mode),
                     Multivector::vector(n, Eigen::VectorXd(x / x.norm())));
    });
  }
  // (5) del |x|^k = k |x|^(k-2) x over several k.
  {
    const double ks[] = {-2.0, -1.0, 1.0, 2.0, 3.0, 4.0};
    run(5, [&](const Eigen::VectorXd& x) {
      double worst = 0.0;
      for (double k : ks) {
        const FieldFn f = strip_analytic(power_field(k), mode);
        const Multivector want = Multivector::vector(
            n, Eigen::VectorXd(k * std::pow(x.norm(), k - 2.0) * x));
        worst = std::max(worst, rel_err(flat_vector_derivative(f, x, mode), want));
      }
      return worst;
    });
  }
  // (6) del (x / |x|^k) = (n - k) / |x|^k, monogenic at k = n.
  {
    const double ks[] = {0.0, 1.0, 2.0, static_cast<double>(n),
                         static_cast<double>(n) + 1.0};
    run(6, [&](const Eigen::VectorXd& x) {
      double worst = 0.0;
      for (double k : ks) {
        const FieldFn f = strip_analytic(shell_field(k), mode);
        const Multivector want = Multivector::scalar(
            n, (n - k) / std::pow(x.norm(), k));
        worst = std::max(worst, rel_err(flat_vector_derivative(f, x, mode), want));
      }
      return worst;
    });
  }
  // (7) del log |x| = x^-1.
  {
    FieldFn f;
    f.ambient_dim = n;
    f.eval = [n](const Eigen::VectorXd& x) {
      return Multivector::scalar(n, std::log(x.norm()));
    };
    f.deriv = [n](const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
      return Multivector::scalar(n, x.dot(v) / x.squaredNorm());
    };
    const FieldFn fl = strip_analytic(f, mode);
    run(7, [&](const Eigen::VectorXd& x) {
      return rel_err(flat_vector_derivative(fl, x, mode),
                     Multivector::vector(n, Eigen::VectorXd(x / x.squaredNorm())));
    });
  }
  return rows;
}

}  // namespace gcalc
