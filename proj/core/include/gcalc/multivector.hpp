#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gcalc/errors.hpp"

namespace gcalc {

inline constexpr int kMaxDim = 12;

/// Metric signature of the algebra.  Only Euclidean signatures are supported:
/// every basis vector squares to +1.
struct Signature {
  int n = 1;

  explicit Signature(int dim) : n(dim) {
    if (dim < 1 || dim > kMaxDim)
      throw DimensionMismatch("algebra dimension must be in [1, 12], got " +
                              std::to_string(dim));
  }
  std::size_t blade_count() const { return std::size_t{1} << n; }
  bool operator==(const Signature&) const = default;
};

/// A basis blade is addressed by a bitmask: bit i set means factor e_{i+1}
/// is present.  The grade of a blade is the popcount of its mask.
using BladeIndex = std::uint32_t;

inline int grade_of(BladeIndex bits) { return std::popcount(bits); }

/// Sign picked up when multiplying basis blades a and b into blade (a ^ b),
/// counting the transpositions needed to interleave the two sorted factor
/// lists.  Shared factors square to +1 and contribute no extra sign.
inline int blade_product_sign(BladeIndex a, BladeIndex b) {
  int swaps = 0;
  BladeIndex t = a >> 1;
  while (t) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

/// Sign of reversing a grade-k blade: (-1)^(k(k-1)/2).
inline int reverse_sign(int grade) {
  return ((grade * (grade - 1) / 2) & 1) ? -1 : 1;
}

/// Dense multivector of the Euclidean geometric algebra G_n.  Stores all 2^n
/// blade coefficients.  Values behave like numbers: every operation returns
/// a fresh multivector and nothing mutates shared state.
class Multivector {
 public:
  explicit Multivector(Signature sig)
      : sig_(sig), c_(sig.blade_count(), 0.0) {}
  explicit Multivector(int dim) : Multivector(Signature(dim)) {}

  static Multivector scalar(int dim, double v) {
    Multivector m{dim};
    m.c_[0] = v;
    return m;
  }
  /// Basis vector e_i, 1-based index.
  static Multivector basis_vector(int dim, int i) {
    if (i < 1 || i > dim)
      throw DimensionMismatch("basis vector index out of range");
    Multivector m{dim};
    m.c_[BladeIndex{1} << (i - 1)] = 1.0;
    return m;
  }
  static Multivector blade(int dim, BladeIndex bits, double coef = 1.0) {
    Multivector m{dim};
    if (bits >= m.c_.size())
      throw DimensionMismatch("blade index out of range for algebra");
    m.c_[bits] = coef;
    return m;
  }
  /// Grade-1 element with the given Euclidean components.
  static Multivector vector(int dim, const Eigen::VectorXd& comps) {
    if (comps.size() != dim)
      throw DimensionMismatch("component count does not match dimension");
    Multivector m{dim};
    for (int i = 0; i < dim; ++i) m.c_[BladeIndex{1} << i] = comps[i];
    return m;
  }

  Signature signature() const { return sig_; }
  int dim() const { return sig_.n; }
  std::size_t coeff_count() const { return c_.size(); }

  double operator[](BladeIndex bits) const { return c_[bits]; }
  double& operator[](BladeIndex bits) { return c_[bits]; }

  double scalar_part() const { return c_[0]; }

  /// Components of the grade-1 part as a Euclidean vector.
  Eigen::VectorXd vector_part() const {
    Eigen::VectorXd v(dim());
    for (int i = 0; i < dim(); ++i) v[i] = c_[BladeIndex{1} << i];
    return v;
  }

  /// Projection onto grade k.  Out-of-range k yields the zero multivector.
  Multivector grade(int k) const {
    Multivector out{sig_};
    if (k < 0 || k > dim()) return out;
    for (BladeIndex b = 0; b < c_.size(); ++b)
      if (grade_of(b) == k) out.c_[b] = c_[b];
    return out;
  }

  /// True when every nonzero coefficient sits at grade k (the zero value is
  /// homogeneous of every grade).
  bool is_homogeneous(int k) const {
    for (BladeIndex b = 0; b < c_.size(); ++b)
      if (c_[b] != 0.0 && grade_of(b) != k) return false;
    return true;
  }

  /// Smallest single grade containing all nonzero coefficients, if one exists.
  std::optional<int> homogeneous_grade() const {
    std::optional<int> g;
    for (BladeIndex b = 0; b < c_.size(); ++b) {
      if (c_[b] == 0.0) continue;
      int gb = grade_of(b);
      if (g && *g != gb) return std::nullopt;
      g = gb;
    }
    return g ? g : std::optional<int>{0};
  }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Multivector& operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
  }
  Multivector& operator/=(double s) { return (*this) *= (1.0 / s); }

  friend Multivector operator+(Multivector a, const Multivector& b) {
    a += b;
    return a;
  }
  friend Multivector operator-(Multivector a, const Multivector& b) {
    a -= b;
    return a;
  }
  friend Multivector operator*(Multivector a, double s) {
    a *= s;
    return a;
  }
  friend Multivector operator*(double s, Multivector a) {
    a *= s;
    return a;
  }
  friend Multivector operator/(Multivector a, double s) {
    a /= s;
    return a;
  }
  friend Multivector operator-(Multivector a) {
    for (double& x : a.c_) x = -x;
    return a;
  }

  friend Multivector operator*(const Multivector& a, const Multivector& b);

  bool operator==(const Multivector& o) const {
    return sig_ == o.sig_ && c_ == o.c_;
  }

  /// Largest coefficient magnitude.
  double inf_norm() const {
    double m = 0.0;
    for (double x : c_)
      if (std::abs(x) > m) m = std::abs(x);
    return m;
  }
  /// Euclidean norm of the coefficient vector; for blades this matches the
  /// usual |B| = sqrt(<B rev(B)>_0).
  double norm() const {
    double s = 0.0;
    for (double x : c_) s += x * x;
    return std::sqrt(s);
  }
  bool is_zero() const {
    for (double x : c_)
      if (x != 0.0) return false;
    return true;
  }

  void check_same(const Multivector& o) const {
    if (sig_ != o.sig_)
      throw SignatureMismatch("multivectors from different algebras");
  }

 private:
  Signature sig_;
  std::vector<double> c_;
};

/// Geometric product.  out is overwritten.
void geometric_product_into(const Multivector& a, const Multivector& b,
                            Multivector& out);
/// out += a b, optionally scaled.  The workhorse of the integrators.
void geometric_product_acc(const Multivector& a, const Multivector& b,
                           Multivector& out, double scale = 1.0);

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  a.check_same(b);
  Multivector out{a.signature()};
  geometric_product_acc(a, b, out);
  return out;
}

Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Grade-raising (outer/wedge) part of the product.  When either factor is a
/// scalar the outer product is the whole geometric product.
Multivector outer_product(const Multivector& a, const Multivector& b);

/// Grade-lowering (inner) part of the product, with the convention that the
/// inner product with a scalar factor is zero.
Multivector inner_product(const Multivector& a, const Multivector& b);

inline Multivector grade_project(const Multivector& a, int k) {
  return a.grade(k);
}

/// Reverse the factor order of every blade: grade k picks up (-1)^(k(k-1)/2).
Multivector reverse(const Multivector& a);

inline constexpr double kBladeInverseEps = 1e-12;

/// Inverse of an invertible blade: rev(B) / <B rev(B)>_0.  Rejects inputs
/// whose scalar invariant vanishes (below eps after normalizing by the
/// largest coefficient) or that are not blades at all.
Multivector blade_inverse(const Multivector& b, double eps = kBladeInverseEps);

/// Unit pseudoscalar e_1 e_2 ... e_n of G_n.
Multivector pseudoscalar(int dim);
/// Its inverse e_n ... e_2 e_1.
Multivector pseudoscalar_inverse(int dim);

/// Scalar magnitude of a grade-n element: <A I^-1>_0.
double determinant(const Multivector& a);

inline constexpr double kEulerParallelEps = 1e-10;

/// ab = |a||b| (cos(theta) + i sin(theta)) for nonzero vectors a, b.
struct EulerDecomposition {
  double magnitude = 0.0;   ///< |a| |b|
  double angle = 0.0;       ///< theta in [0, pi]
  Multivector plane;        ///< unit bivector i with i^2 = -1; zero if degenerate
  bool parallel = false;    ///< sin(theta) below tolerance, plane undefined
};

EulerDecomposition euler_decompose(const Multivector& a, const Multivector& b);

}  // namespace gcalc
