#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Dense>
#include <gcalc/classical.hpp>
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

// Composite Simpson on [a, b], deliberately unrelated to the library's
// Gauss-Legendre machinery.
double simpson(const std::function<double(double)>& h, double a, double b,
               int cells = 400) {
  double sum = h(a) + h(b);
  double dx = (b - a) / (2 * cells);
  for (int i = 1; i < 2 * cells; ++i)
    sum += h(a + i * dx) * (i % 2 ? 4.0 : 2.0);
  return sum * dx / 3.0;
}

double simpson2(const std::function<double(double, double)>& h, double ax,
                double bx, double ay, double by, int cells = 120) {
  return simpson(
      [&](double x) {
        return simpson([&, x](double y) { return h(x, y); }, ay, by, cells);
      },
      ax, bx, cells);
}

}  // namespace

TEST_CASE("green on the unit square against a sewn-up line-integral oracle") {
  // f = (x1 x2, x1 + x2^2).
  FieldFn f = poly_field(2, "x1*x2*e1 + x1*e2 + x2^2*e2");
  auto f1 = [](double x, double y) { return x * y; };
  auto f2 = [](double x, double y) { return x + y * y; };

  // Counterclockwise circulation, edge by edge.
  double circ =
      simpson([&](double t) { return f1(t, 0.0); }, 0.0, 1.0) +
      simpson([&](double t) { return f2(1.0, t); }, 0.0, 1.0) -
      simpson([&](double t) { return f1(t, 1.0); }, 0.0, 1.0) -
      simpson([&](double t) { return f2(0.0, t); }, 0.0, 1.0);
  // Outward flux: n . f on each edge.
  double flux =
      simpson([&](double t) { return f2(t, 1.0); }, 0.0, 1.0) +
      simpson([&](double t) { return -f2(t, 0.0); }, 0.0, 1.0) +
      simpson([&](double t) { return f1(1.0, t); }, 0.0, 1.0) +
      simpson([&](double t) { return -f1(0.0, t); }, 0.0, 1.0);
  double curl_int =
      simpson2([&](double x, double y) { return 1.0 - x; }, 0, 1, 0, 1);
  double div_int =
      simpson2([&](double x, double y) { return y + 2.0 * y; }, 0, 1, 0, 1);

  GreenReport rep = greens_theorem_check(f, identity_patch(2), quick(8, 4));
  CHECK(rep.circulation_ccw == doctest::Approx(circ).epsilon(1e-9));
  CHECK(rep.curl_area_integral == doctest::Approx(curl_int).epsilon(1e-9));
  CHECK(rep.flux_outward == doctest::Approx(flux).epsilon(1e-9));
  CHECK(rep.divergence_area_integral ==
        doctest::Approx(div_int).epsilon(1e-9));
  CHECK(rep.circulation_residual <= 1e-10);
  CHECK(rep.flux_residual <= 1e-10);
  CHECK(rep.extraction_gap <= 1e-12);
  CHECK(rep.offgrade_norm <= 1e-12);
  CHECK(rep.ftc.rel_residual <= 1e-12);
}

TEST_CASE("green rotation field has circulation equal to twice the area") {
  FieldFn f = poly_field(2, "-x2*e1 + x1*e2");
  GreenReport rep = greens_theorem_check(f, disk_polar_patch(1.0), quick(8, 6));
  CHECK(rep.circulation_ccw ==
        doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-8));
  CHECK(rep.flux_outward == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(rep.circulation_residual <= 1e-8);
  CHECK(rep.flux_residual <= 1e-8);
}

TEST_CASE("green rejects fields and regions of the wrong shape") {
  CHECK_THROWS_AS(
      greens_theorem_check(poly_field(2, "x1 + x2"), identity_patch(2),
                           quick(2, 1)),
      DomainError);
  CHECK_THROWS_AS(
      greens_theorem_check(poly_field(3, "x1*e1"), identity_patch(2, 3),
                           quick(2, 1)),
      DimensionMismatch);
}

TEST_CASE("stokes on the bent sheet against a line-integral oracle") {
  // f = (x2 x3, -x1, x3^2 + x1).
  FieldFn f = poly_field(3, "x2*x3*e1 - x1*e2 + x3^2*e3 + x1*e3");
  auto fv = [](const Eigen::Vector3d& x) {
    return Eigen::Vector3d(x[1] * x[2], -x[0], x[2] * x[2] + x[0]);
  };
  // The sheet is a graph over the unit square; its induced boundary is the
  // image of the square's clockwise boundary.
  auto lift = [](double a, double b) {
    return Eigen::Vector3d(a, b, 0.5 * (1.0 - std::sin(a * a)) - 3.0 * b);
  };
  auto dlift_a = [](double a, double b) {
    return Eigen::Vector3d(1.0, 0.0, -a * std::cos(a * a));
  };
  auto dlift_b = [](double, double) { return Eigen::Vector3d(0.0, 1.0, -3.0); };

  // Clockwise: (0,0) -> (0,1) -> (1,1) -> (1,0) -> (0,0).
  double circ =
      simpson([&](double t) { return fv(lift(0, t)).dot(dlift_b(0, t)); }, 0,
              1) +
      simpson([&](double t) { return fv(lift(t, 1)).dot(dlift_a(t, 1)); }, 0,
              1) -
      simpson([&](double t) { return fv(lift(1, t)).dot(dlift_b(1, t)); }, 0,
              1) -
      simpson([&](double t) { return fv(lift(t, 0)).dot(dlift_a(t, 0)); }, 0,
              1);

  StokesReport rep = stokes_theorem_check(f, bent_sheet_patch(), quick(8, 6));
  CHECK(rep.circulation == doctest::Approx(circ).epsilon(1e-8));
  CHECK(rep.scalar_residual <= 1e-8);
  CHECK(rep.extraction_gap <= 1e-12);
  CHECK(rep.ftc.rel_residual <= 1e-10);

  // Independent area-side oracle: curl f = (0, x2 - 1, -1 - x3) here;
  // flux through the graph with normal dual to the tangent plane.
  auto curl = [](const Eigen::Vector3d& x) {
    return Eigen::Vector3d(0.0, x[1] - 1.0, -1.0 - x[2]);
  };
  double area_side = simpson2(
      [&](double a, double b) {
        Eigen::Vector3d nrm = dlift_a(a, b).cross(dlift_b(a, b));
        return curl(lift(a, b)).dot(nrm);
      },
      0, 1, 0, 1);
  // The library pairs the induced (clockwise) boundary with the normal
  // I x2hat; for this parametrization that normal is opposite the cross
  // product of the tangents, so the oracle flips sign.
  CHECK(rep.curl_flux == doctest::Approx(-area_side).epsilon(1e-8));
}

TEST_CASE("gauss on the unit cube: flux of x is the dimension times volume") {
  FieldFn f = poly_field(3, "x1*e1 + x2*e2 + x3*e3");
  GaussReport rep = gauss_divergence_check(f, identity_patch(3), quick(4, 2));
  CHECK(rep.divergence_integral == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(rep.flux == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(rep.scalar_residual <= 1e-12);
  CHECK(rep.extraction_gap <= 1e-12);
}

TEST_CASE("gauss with a polynomial field against a face-integral oracle") {
  // f = (x1^2 x3, x1 - x2 x3, x2 + x3^2).
  FieldFn f = poly_field(3,
                         "x1^2*x3*e1 + x1*e2 - x2*x3*e2 + x2*e3 + x3^2*e3");
  auto fx = [](double x, double y, double z) { return x * x * z; };
  auto fy = [](double x, double y, double z) { return x - y * z; };
  auto fz = [](double x, double y, double z) { return y + z * z; };
  double flux =
      simpson2([&](double y, double z) { return fx(1, y, z); }, 0, 1, 0, 1) -
      simpson2([&](double y, double z) { return fx(0, y, z); }, 0, 1, 0, 1) +
      simpson2([&](double x, double z) { return fy(x, 1, z); }, 0, 1, 0, 1) -
      simpson2([&](double x, double z) { return fy(x, 0, z); }, 0, 1, 0, 1) +
      simpson2([&](double x, double y) { return fz(x, y, 1); }, 0, 1, 0, 1) -
      simpson2([&](double x, double y) { return fz(x, y, 0); }, 0, 1, 0, 1);

  GaussReport rep = gauss_divergence_check(f, identity_patch(3), quick(8, 3));
  CHECK(rep.flux == doctest::Approx(flux).epsilon(1e-8));
  CHECK(rep.scalar_residual <= 1e-10);
  CHECK(rep.ftc.rel_residual <= 1e-12);
}

TEST_CASE("gauss in the plane agrees with green's flux form") {
  FieldFn f = poly_field(2, "x1*x2*e1 + x2^2*e2");
  GaussReport g2 = gauss_divergence_check(f, identity_patch(2), quick(8, 3));
  GreenReport gr = greens_theorem_check(f, identity_patch(2), quick(8, 3));
  CHECK(g2.flux == doctest::Approx(gr.flux_outward).epsilon(1e-12));
  CHECK(g2.divergence_integral ==
        doctest::Approx(gr.divergence_area_integral).epsilon(1e-12));
}

TEST_CASE("path independence of gradient integrals") {
  FieldFn f = poly_field(2, "x1^2*x2 + x2^3 + x1*e12");

  PatchMap straight = segment_patch(Eigen::Vector2d(0.0, 0.0),
                                    Eigen::Vector2d(1.0, 1.0));
  PatchMap curved;
  curved.domain = KRectangle::unit(1);
  curved.ambient_dim = 2;
  curved.map = [](const Eigen::VectorXd& s) {
    Eigen::VectorXd x(2);
    x[0] = s[0];
    x[1] = s[0] * s[0] * (2.0 - s[0]);
    return x;
  };
  curved.smoothness = Smoothness::smooth;
  curved.name = "cubic-detour";

  PathIndependenceReport rep =
      path_independence_check(f, straight, curved, quick(8, 8));
  CHECK(rep.curve_gap <= 1e-10);
  CHECK(rep.endpoint_residual <= 1e-10);
  Eigen::Vector2d b(1.0, 1.0), a(0.0, 0.0);
  CHECK((rep.endpoint_difference - (f(b) - f(a))).inf_norm() <= 1e-14);

  PatchMap elsewhere = segment_patch(Eigen::Vector2d(0.0, 0.0),
                                     Eigen::Vector2d(1.0, 0.5));
  CHECK_THROWS_AS(path_independence_check(f, straight, elsewhere, quick(4, 4)),
                  EndpointMismatch);
}

TEST_CASE("path check rejects non-curves") {
  CHECK_THROWS_AS(
      path_independence_check(poly_field(2, "x1"), identity_patch(2),
                              identity_patch(2), quick(2, 1)),
      DimensionMismatch);
}
