#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <gcalc/registry.hpp>

using namespace gcalc;

TEST_CASE("patch builders by name") {
  PatchMap disk = make_patch(R"({"type": "disk_polar", "radius": 2})");
  CHECK(disk.ambient_dim == 2);
  CHECK(disk.k() == 2);
  CHECK(disk.domain.bound(0).hi == 2.0);

  PatchMap seg =
      make_patch(R"({"type": "segment", "from": [0, 0], "to": [1, 2]})");
  Eigen::VectorXd s(1);
  s << 1.0;
  CHECK(seg.map(s)[1] == 2.0);

  PatchMap box = make_patch(R"({"type": "box", "bounds": [[0, 2], [-1, 1]]})");
  CHECK(box.k() == 2);
  CHECK(box.domain.volume() == doctest::Approx(4.0));
  Eigen::Vector2d c = box.domain.center();
  CHECK(box.map(c)[0] == 1.0);

  PatchMap sheet = make_patch(R"({"type": "figure2"})");
  CHECK(sheet.ambient_dim == 3);

  PatchMap lin = make_patch(
      R"({"type": "linear", "columns": [[1, 0, 0], [0, 1, 1]]})");
  CHECK(lin.ambient_dim == 3);
  CHECK(lin.k() == 2);

  PatchMap graph = make_patch(
      R"({"type": "graph2d", "height": "x1*x2"})");
  Eigen::Vector2d g(0.5, 0.5);
  CHECK(graph.map(g)[2] == doctest::Approx(0.25));
  REQUIRE(static_cast<bool>(graph.jacobian));
  CHECK(graph.jacobian(g)(2, 0) == doctest::Approx(0.5));
}

TEST_CASE("boundary builders") {
  PatchComplex circle = make_boundary(
      R"({"type": "circle", "radius": 1.5, "center": [1, -1]})");
  REQUIRE(circle.parts.size() == 1);
  Eigen::VectorXd t(1);
  t << 0.0;
  Eigen::VectorXd p = circle.parts[0].patch.map(t);
  CHECK(p[0] == doctest::Approx(2.5));
  CHECK(p[1] == doctest::Approx(-1.0));

  PatchComplex sphere = make_boundary(R"({"type": "sphere", "radius": 1})");
  CHECK(sphere.parts.size() == 6);
  CHECK(sphere.ambient_dim() == 3);
}

TEST_CASE("field builders") {
  FieldFn c = make_field(R"({"type": "constant", "value": "2 - e12"})", 2);
  Eigen::Vector2d x(5.0, 5.0);
  CHECK(c(x)[0] == 2.0);
  CHECK(c(x)[0b11] == -1.0);

  FieldFn poly = make_field(R"({"type": "poly", "terms": "x1*e1"})", 3);
  CHECK(poly.ambient_dim == 3);

  FieldFn pw = make_field(R"({"type": "complex_power", "power": 3})", 2);
  Eigen::Vector2d z(2.0, 0.0);
  CHECK(pw(z)[0] == doctest::Approx(8.0));

  // Horner evaluation of 1 + 2z + z^3 at z = i: 1 + 2i - i = 1 + i.
  FieldFn cp = make_field(
      R"({"type": "complex_poly", "coefficients": [1, 2, 0, 1]})", 2);
  Eigen::Vector2d i(0.0, 1.0);
  CHECK(cp(i)[0] == doctest::Approx(1.0));
  CHECK(cp(i)[0b11] == doctest::Approx(1.0));

  FieldFn kern = make_field(
      R"({"type": "cauchy_kernel", "source": [0, 0, 0]})", 3);
  REQUIRE(kern.singularity.has_value());
  Eigen::Vector3d y(2.0, 0.0, 0.0);
  CHECK(kern(y).vector_part()[0] == doctest::Approx(0.25));
}

TEST_CASE("registry errors") {
  CHECK_THROWS_AS(make_patch(R"({"type": "nope"})"), UnknownKey);
  CHECK_THROWS_AS(make_patch(R"({"type": "disk_polar", "radius": 1, "x": 2})"),
                  UnknownKey);
  CHECK_THROWS_AS(make_patch(R"({"type": "disk_polar"})"), ParseError);
  CHECK_THROWS_AS(make_patch(R"({"type": "disk_polar", "radius": "wide"})"),
                  ParseError);
  CHECK_THROWS_AS(make_patch("{"), ParseError);
  CHECK_THROWS_AS(make_field(R"({"type": "complex_power", "power": 2})", 3),
                  DimensionMismatch);
  CHECK_THROWS_AS(
      make_field(R"({"type": "poly", "terms": "x1*e1"})", 13),
      DimensionMismatch);

  try {
    make_patch("{\"type\": \"disk_polar\",\n  \"radius\": }");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);  // json syntax errors carry line/column
  }
}

TEST_CASE("catalogs are populated") {
  CHECK(patch_catalog().size() >= 8);
  CHECK(boundary_catalog().size() >= 2);
  CHECK(field_catalog().size() >= 5);
  for (const CatalogEntry& e : patch_catalog()) {
    CHECK(!e.name.empty());
    CHECK(!e.blurb.empty());
  }
}
