#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <gcalc/monogenic.hpp>
#include <gcalc/patches.hpp>
#include <gcalc/poly_field.hpp>

using namespace gcalc;

namespace {

QuadratureSpec quick(int q, int m) {
  QuadratureSpec s;
  s.points = q;
  s.subdivisions = m;
  return s;
}

}  // namespace

TEST_CASE("unit sphere areas") {
  CHECK(unit_sphere_area(1) == doctest::Approx(2.0));
  CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * std::numbers::pi));
  CHECK(unit_sphere_area(4) ==
        doctest::Approx(2.0 * std::numbers::pi * std::numbers::pi));
  // Recurrence Omega_(n+2) = 2 pi Omega_n / n.
  for (int n = 1; n <= 10; ++n)
    CHECK(unit_sphere_area(n + 2) ==
          doctest::Approx(2.0 * std::numbers::pi * unit_sphere_area(n) / n));
}

TEST_CASE("holomorphic powers are monogenic in the plane") {
  KRectangle box({{-1.0, 1.0}, {-1.0, 1.0}});
  for (int p : {0, 1, 2, 5}) {
    MonogenicityReport rep =
        monogenicity_certificate(complex_power_field(p), box, SampleSpec{});
    CAPTURE(p);
    CHECK(rep.monogenic);
    CHECK(rep.samples == 200);
    CHECK(rep.max_residual <= rep.tolerance);
  }
}

TEST_CASE("the cauchy kernel is monogenic away from its source") {
  Eigen::Vector3d src(0.0, 0.0, 0.0);
  FieldFn k = cauchy_kernel_field(3, src);
  KRectangle box({{-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}});
  SampleSpec ss;
  ss.exclusion_radius = 0.4;
  MonogenicityReport rep = monogenicity_certificate(k, box, ss);
  CHECK(rep.monogenic);
}

TEST_CASE("non-monogenic fields are flagged") {
  // del x = n, nowhere near zero.
  MonogenicityReport rep = monogenicity_certificate(
      identity_field(2), KRectangle({{-1.0, 1.0}, {-1.0, 1.0}}), SampleSpec{});
  CHECK(!rep.monogenic);
  CHECK(rep.max_residual == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("certificate is deterministic in the seed") {
  KRectangle box({{-1.0, 1.0}, {-1.0, 1.0}});
  FieldFn f = complex_power_field(3);
  SampleSpec a;
  a.seed = 99;
  SampleSpec b;
  b.seed = 99;
  CHECK(monogenicity_certificate(f, box, a).max_residual ==
        monogenicity_certificate(f, box, b).max_residual);
}

TEST_CASE("cauchy reconstruction of a constant from the circle") {
  Multivector c{2};
  c[0] = 1.5;
  c[0b11] = -0.5;
  FieldFn f = constant_field(2, c);
  CauchyReport rep = cauchy_reconstruct(f, circle_boundary(1.0),
                                        Eigen::Vector2d(0.0, 0.0),
                                        quick(8, 8));
  CHECK(rep.abs_err <= 1e-10);
  CHECK((rep.reconstructed - c).inf_norm() <= 1e-10);
  CHECK(!rep.near_boundary);
}

TEST_CASE("cauchy reconstruction of a constant from the sphere") {
  Multivector c{3};
  c[0] = 2.0;
  c[0b101] = 1.0;
  FieldFn f = constant_field(3, c);
  CauchyReport rep = cauchy_reconstruct(f, sphere_boundary(1.0),
                                        Eigen::Vector3d(0.1, -0.05, 0.2),
                                        quick(8, 6));
  CHECK(rep.abs_err <= 1e-6);
}

TEST_CASE("cauchy reconstruction of z^2 off center") {
  FieldFn f = complex_power_field(2);
  for (auto [x, y] : {std::pair{0.0, 0.0}, {0.3, -0.2}, {-0.5, 0.1}}) {
    Eigen::Vector2d pt(x, y);
    CauchyReport rep =
        cauchy_reconstruct(f, circle_boundary(1.0), pt, quick(10, 8));
    CAPTURE(x);
    CAPTURE(y);
    CHECK(rep.abs_err <= 1e-8);
    // Direct value is Re(z^2) + Im(z^2) e12.
    CHECK(rep.direct[0] == doctest::Approx(x * x - y * y));
    CHECK(rep.direct[0b11] == doctest::Approx(2.0 * x * y));
  }
}

TEST_CASE("points hugging the boundary raise the near flag") {
  FieldFn f = complex_power_field(1);
  CauchyReport rep = cauchy_reconstruct(f, circle_boundary(1.0),
                                        Eigen::Vector2d(0.995, 0.0),
                                        quick(4, 4));
  CHECK(rep.near_boundary);
  CHECK(rep.boundary_distance <= 0.02);
}

TEST_CASE("full formula reconstructs a non-monogenic field") {
  // f = x has del f = 2 everywhere, so the volume correction carries real
  // weight here.
  FieldFn f = identity_field(2);
  PatchMap square;
  {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2) * 2.0;
    square = linear_patch(a);
    auto base = square.map;
    square.map = [base](const Eigen::VectorXd& s) {
      Eigen::VectorXd x = base(s);
      x[0] -= 1.0;
      x[1] -= 1.0;
      return x;
    };
  }
  Eigen::Vector2d pt(0.2, -0.3);
  FullCauchyReport rep = full_cauchy_formula(f, square, pt, quick(8, 24));
  CHECK(rep.excluded_radius > 0.0);
  CHECK(rep.abs_err <= std::max(2e-3, rep.excluded_error_bound * 2.0));
}

TEST_CASE("full formula collapses to the boundary term for monogenic fields") {
  FieldFn f = complex_power_field(2);
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2) * 2.0;
  PatchMap square = linear_patch(a);
  auto base = square.map;
  square.map = [base](const Eigen::VectorXd& s) {
    Eigen::VectorXd x = base(s);
    x[0] -= 1.0;
    x[1] -= 1.0;
    return x;
  };
  Eigen::Vector2d pt(-0.1, 0.25);
  FullCauchyReport rep = full_cauchy_formula(f, square, pt, quick(8, 16));
  CHECK(rep.abs_err <= 1e-4);
}
