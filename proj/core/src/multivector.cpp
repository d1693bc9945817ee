#include "gcalc/multivector.hpp"

#include <cmath>

namespace gcalc {

void geometric_product_acc(const Multivector& a, const Multivector& b,
                           Multivector& out, double scale) {
  const std::size_t nb = a.coeff_count();
  for (BladeIndex i = 0; i < nb; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const double sai = ai * scale;
    for (BladeIndex j = 0; j < nb; ++j) {
      const double bj = b[j];
      if (bj == 0.0) continue;
      out[i ^ j] += blade_product_sign(i, j) * sai * bj;
    }
  }
}

void geometric_product_into(const Multivector& a, const Multivector& b,
                            Multivector& out) {
  a.check_same(b);
  out.check_same(a);
  for (BladeIndex i = 0; i < out.coeff_count(); ++i) out[i] = 0.0;
  geometric_product_acc(a, b, out);
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  return a * b;
}

Multivector outer_product(const Multivector& a, const Multivector& b) {
  a.check_same(b);
  Multivector out{a.signature()};
  const std::size_t nb = a.coeff_count();
  for (BladeIndex i = 0; i < nb; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (BladeIndex j = 0; j < nb; ++j) {
      const double bj = b[j];
      if (bj == 0.0) continue;
      // Scalar factors multiply through; otherwise keep grade r+s, i.e.
      // the factors must share no basis vector.
      if (i != 0 && j != 0 && (i & j) != 0) continue;
      out[i ^ j] += blade_product_sign(i, j) * ai * bj;
    }
  }
  return out;
}

Multivector inner_product(const Multivector& a, const Multivector& b) {
  a.check_same(b);
  Multivector out{a.signature()};
  const std::size_t nb = a.coeff_count();
  for (BladeIndex i = 0; i < nb; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (BladeIndex j = 0; j < nb; ++j) {
      const double bj = b[j];
      if (bj == 0.0) continue;
      // Scalar factors contribute nothing; otherwise keep grade |r-s|,
      // which for basis blades means one factor contains the other.
      if (i == 0 || j == 0) continue;
      if ((i & j) != i && (i & j) != j) continue;
      out[i ^ j] += blade_product_sign(i, j) * ai * bj;
    }
  }
  return out;
}

Multivector reverse(const Multivector& a) {
  Multivector out{a.signature()};
  for (BladeIndex b = 0; b < a.coeff_count(); ++b)
    out[b] = reverse_sign(grade_of(b)) * a[b];
  return out;
}

Multivector blade_inverse(const Multivector& b, double eps) {
  const double big = b.inf_norm();
  if (big == 0.0) throw SingularBlade("cannot invert the zero multivector");
  if (!b.homogeneous_grade())
    throw SingularBlade("blade inverse: input mixes grades");
  const Multivector p = b * reverse(b);
  const double s = p.scalar_part();
  const double scale = big * big;
  if (std::abs(s) <= eps * scale)
    throw SingularBlade("blade inverse: scalar invariant vanishes");
  // For a genuine blade, B rev(B) is exactly scalar; allow roundoff only.
  for (BladeIndex i = 1; i < p.coeff_count(); ++i)
    if (std::abs(p[i]) > eps * scale + eps * std::abs(s))
      throw SingularBlade("blade inverse: input is not a blade");
  return reverse(b) / s;
}

Multivector pseudoscalar(int dim) {
  Signature sig{dim};
  return Multivector::blade(dim, static_cast<BladeIndex>(sig.blade_count() - 1));
}

Multivector pseudoscalar_inverse(int dim) {
  return reverse(pseudoscalar(dim));
}

double determinant(const Multivector& a) {
  const int n = a.dim();
  if (!a.is_homogeneous(n))
    throw DomainError("determinant requires a grade-n element");
  return (a * pseudoscalar_inverse(n)).scalar_part();
}

EulerDecomposition euler_decompose(const Multivector& a, const Multivector& b) {
  a.check_same(b);
  if (!a.is_homogeneous(1) || !b.is_homogeneous(1))
    throw DimensionMismatch("euler_decompose requires two vectors");
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0)
    throw DomainError("euler_decompose requires nonzero vectors");

  EulerDecomposition d{.magnitude = na * nb,
                       .angle = 0.0,
                       .plane = Multivector{a.signature()},
                       .parallel = false};
  const double cosv = inner_product(a, b).scalar_part() / d.magnitude;
  const Multivector wedge = outer_product(a, b);
  const double sinv = wedge.norm() / d.magnitude;
  d.angle = std::atan2(sinv, cosv);
  if (sinv < kEulerParallelEps) {
    d.parallel = true;  // angle is 0 or pi, plane left at zero
    return d;
  }
  d.plane = wedge / wedge.norm();
  return d;
}

}  // namespace gcalc
