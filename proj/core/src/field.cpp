#include "gcalc/field.hpp"

#include <cmath>
#include <complex>

namespace gcalc {

FieldFn constant_field(int dim, const Multivector& value) {
  if (value.dim() != dim)
    throw DimensionMismatch("constant field value has wrong dimension");
  FieldFn f;
  f.ambient_dim = dim;
  f.eval = [value](const Eigen::VectorXd&) { return value; };
  f.deriv = [dim](const Eigen::VectorXd&, const Eigen::VectorXd&) {
    return Multivector{dim};
  };
  f.smoothness = Smoothness::smooth;
  f.name = "constant";
  return f;
}

FieldFn identity_field(int dim) {
  FieldFn f;
  f.ambient_dim = dim;
  f.eval = [dim](const Eigen::VectorXd& x) {
    return Multivector::vector(dim, x);
  };
  f.deriv = [dim](const Eigen::VectorXd&, const Eigen::VectorXd& v) {
    return Multivector::vector(dim, v);
  };
  f.smoothness = Smoothness::smooth;
  f.name = "identity_vector";
  return f;
}

FieldFn complex_power_field(int power) {
  if (power < 0) throw DomainError("complex power must be nonnegative");
  FieldFn f;
  f.ambient_dim = 2;
  f.eval = [power](const Eigen::VectorXd& x) {
    const std::complex<double> w =
        std::pow(std::complex<double>(x[0], x[1]), power);
    Multivector m{2};
    m[0b00] = w.real();
    m[0b11] = w.imag();
    return m;
  };
  f.deriv = [power](const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
    // D_v f from w'(z) = p z^(p-1) and the Cauchy-Riemann structure.
    std::complex<double> wp(0.0, 0.0);
    if (power > 0)
      wp = static_cast<double>(power) *
           std::pow(std::complex<double>(x[0], x[1]), power - 1);
    const double ux = wp.real(), vx = wp.imag();
    const double uy = -vx, vy = ux;
    Multivector m{2};
    m[0b00] = ux * v[0] + uy * v[1];
    m[0b11] = vx * v[0] + vy * v[1];
    return m;
  };
  f.smoothness = Smoothness::smooth;
  f.name = "complex_poly";
  return f;
}

FieldFn cauchy_kernel_field(int dim, const Eigen::VectorXd& source) {
  if (source.size() != dim)
    throw DimensionMismatch("kernel source point has wrong dimension");
  FieldFn f;
  f.ambient_dim = dim;
  f.eval = [dim, source](const Eigen::VectorXd& y) {
    const Eigen::VectorXd d = y - source;
    const double r = d.norm();
    return Multivector::vector(dim, Eigen::VectorXd(d / std::pow(r, dim)));
  };
  f.deriv = [dim, source](const Eigen::VectorXd& y, const Eigen::VectorXd& v) {
    const Eigen::VectorXd d = y - source;
    const double r = d.norm();
    const double rn = std::pow(r, dim);
    const Eigen::VectorXd g =
        v / rn - d * (dim * d.dot(v) / (rn * r * r));
    return Multivector::vector(dim, g);
  };
  f.smoothness = Smoothness::smooth;
  f.singularity = source;
  f.name = "cauchy_kernel";
  return f;
}

}  // namespace gcalc
