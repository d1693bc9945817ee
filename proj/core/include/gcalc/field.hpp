#pragma once

#include <functional>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "gcalc/multivector.hpp"
#include "gcalc/patch.hpp"

namespace gcalc {

/// A multivector-valued field on (an open subset of) R^n.  `deriv` is the
/// optional analytic directional derivative D_v f(x); when absent, consumers
/// fall back to 4th-order finite differences.
struct FieldFn {
  int ambient_dim = 0;
  std::function<Multivector(const Eigen::VectorXd&)> eval;
  std::function<Multivector(const Eigen::VectorXd& x, const Eigen::VectorXd& v)>
      deriv;
  Smoothness smoothness = Smoothness::c1;
  std::optional<Eigen::VectorXd> singularity;
  std::string name;

  Multivector operator()(const Eigen::VectorXd& x) const { return eval(x); }
  bool has_analytic_derivative() const { return static_cast<bool>(deriv); }
  void validate() const {
    if (ambient_dim < 1 || ambient_dim > kMaxDim)
      throw DimensionMismatch("field ambient dimension out of range");
    if (!eval) throw DomainError("field has no evaluator");
  }
};

/// f(x) = value for all x.
FieldFn constant_field(int dim, const Multivector& value);
inline FieldFn one_field(int dim) {
  return constant_field(dim, Multivector::scalar(dim, 1.0));
}

/// f(x) = x as a grade-1 multivector.
FieldFn identity_field(int dim);

/// The G_2 embedding of the holomorphic power w(z) = z^p (p >= 0):
/// f = Re(w) + Im(w) e12 with z = x1 + i x2.  Satisfies the vector-derivative
/// equation exactly, so it serves as the planar monogenic test family.
FieldFn complex_power_field(int power);

/// f(y) = (y - source) / |y - source|^n, the Cauchy kernel with the given
/// source point; monogenic away from the source, which is recorded as the
/// field's singularity.
FieldFn cauchy_kernel_field(int dim, const Eigen::VectorXd& source);

}  // namespace gcalc
