// Acceptance suite: one line per criterion, PASS or FAIL, pinned tolerances.
// Run through ctest or directly; exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <gcalc/classical.hpp>
#include <gcalc/integrator.hpp>
#include <gcalc/monogenic.hpp>
#include <gcalc/patches.hpp>
#include <gcalc/poly_field.hpp>
#include <gcalc/scenario.hpp>

#include "blade_oracle.hpp"

using namespace gcalc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Multivector random_mv(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Multivector m{dim};
  for (BladeIndex b = 0; b < m.coeff_count(); ++b) m[b] = u(rng);
  return m;
}

double rel(const Multivector& got, const Multivector& want) {
  return (got - want).inf_norm() / std::max(1.0, want.inf_norm());
}

QuadratureSpec gl(int q, int m) {
  QuadratureSpec s;
  s.points = q;
  s.subdivisions = m;
  return s;
}

// ---- criterion 1: exhaustive blade-product oracle -------------------------

Outcome criterion_blades() {
  long pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    const BladeIndex count = BladeIndex{1} << n;
    for (BladeIndex a = 0; a < count; ++a) {
      for (BladeIndex b = 0; b < count; ++b) {
        auto [sign, mask] = oracle::blade_product_masks(a, b);
        if (mask != (a ^ b) || blade_product_sign(a, b) != sign)
          return {false, "mismatch at n=" + std::to_string(n) + " a=" +
                             std::to_string(a) + " b=" + std::to_string(b)};
        Multivector p = Multivector::blade(n, a) * Multivector::blade(n, b);
        for (BladeIndex c = 0; c < count; ++c)
          if (p[c] != (c == mask ? static_cast<double>(sign) : 0.0))
            return {false, "product coefficient mismatch at n=" +
                               std::to_string(n)};
        ++pairs;
      }
    }
  }
  return {true, std::to_string(pairs) + " blade pairs, exact, n <= 6"};
}

// ---- criterion 2: product splits and distributivity -----------------------

Outcome criterion_splits() {
  std::mt19937_64 rng(kDefaultSeed);
  double worst = 0.0;
  const long trials = 1000;
  for (long t = 0; t < trials; ++t) {
    const int n = 2 + static_cast<int>(t % 5);  // cycles 2..6
    Multivector a = random_mv(n, rng);
    Multivector b = random_mv(n, rng);

    // Split identity: for a vector a and homogeneous A_r,
    //   a . A_r = (a A_r - (-1)^r A_r a) / 2,
    //   a ^ A_r = (a A_r + (-1)^r A_r a) / 2.
    Multivector av = a.grade(1);
    for (int r = 1; r <= n; ++r) {
      Multivector ar = b.grade(r);
      const double sgn = (r % 2 == 0) ? 1.0 : -1.0;
      Multivector comm = (av * ar - ar * av * sgn) * 0.5;
      Multivector anti = (av * ar + ar * av * sgn) * 0.5;
      worst = std::max(worst, rel(inner_product(av, ar), comm));
      worst = std::max(worst, rel(outer_product(av, ar), anti));
    }
    // The full product is the sum of its inner, outer, and cross-grade parts:
    // check a b against the grade-resolved reassembly.
    Multivector sum{n};
    for (int r2 = 0; r2 <= n; ++r2)
      for (int s2 = 0; s2 <= n; ++s2) sum += a.grade(r2) * b.grade(s2);
    worst = std::max(worst, rel(a * b, sum));

    // Distributivity.
    Multivector c = random_mv(n, rng);
    worst = std::max(worst, rel(a * (b + c), a * b + a * c));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%ld random inputs per identity, max rel err %.2e (tol 1e-12)",
                trials, worst);
  return {worst <= 1e-12, buf};
}

// ---- criterion 3: reciprocal frames and the frame lemma -------------------

std::vector<PatchMap> shipped_patches() {
  Eigen::MatrixXd lin(3, 2);
  lin.col(0) << 1.0, 0.5, 0.0;
  lin.col(1) << -0.25, 1.0, 0.75;
  std::vector<PatchMap> out;
  out.push_back(identity_patch(1, 2));
  out.push_back(identity_patch(2));
  out.push_back(identity_patch(2, 3));
  out.push_back(identity_patch(3));
  out.push_back(bent_sheet_patch());
  out.push_back(disk_polar_patch(1.5));
  out.push_back(sphere_octant_patch(1.0));
  out.push_back(linear_patch(lin));
  out.push_back(graph2d_patch(
      [](double a, double b) { return a * a - 0.5 * b; },
      [](double a, double) { return Eigen::Vector2d(2.0 * a, -0.5); }));
  out.push_back(segment_patch(Eigen::Vector2d(0.0, -1.0),
                              Eigen::Vector2d(2.0, 0.5)));
  out.push_back(arc_patch(Eigen::Vector2d(0.0, 0.0), 2.0, 0.0,
                          0.75 * std::numbers::pi));
  return out;
}

Eigen::VectorXd interior_point(const KRectangle& dom, std::mt19937_64& rng) {
  Eigen::VectorXd s(dom.k());
  for (int i = 0; i < dom.k(); ++i) {
    const Interval& b = dom.bound(i);
    // Keep 2% clear of the faces; frames may legitimately degenerate there.
    std::uniform_real_distribution<double> u(b.lo + 0.02 * b.length(),
                                             b.hi - 0.02 * b.length());
    s[i] = u(rng);
  }
  return s;
}

Outcome criterion_frames() {
  std::mt19937_64 rng(kDefaultSeed);
  double worst_delta = 0.0;
  for (const PatchMap& p : shipped_patches()) {
    for (int t = 0; t < 100; ++t) {
      Eigen::VectorXd s = interior_point(p.domain, rng);
      FrameData fr = tangent_frame(p, s);
      for (int i = 0; i < p.k(); ++i)
        for (int j = 0; j < p.k(); ++j) {
          double dot = fr.reciprocals[i].vector_part().dot(
              fr.tangents[j].vector_part());
          worst_delta = std::max(
              worst_delta, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
  }

  // Frame lemma under finite differences on curved k = 1, 2, 3 patches.
  PatchMap curve = arc_patch(Eigen::Vector2d(0.0, 0.0), 1.5, 0.2, 2.0);
  curve.jacobian = nullptr;
  PatchMap sheet = bent_sheet_patch();
  sheet.jacobian = nullptr;
  PatchMap solid;  // curved solid: a sheared, bent cube
  solid.domain = KRectangle::unit(3);
  solid.ambient_dim = 3;
  solid.map = [](const Eigen::VectorXd& s) {
    Eigen::VectorXd x(3);
    x[0] = s[0] + 0.1 * std::sin(s[1]);
    x[1] = s[1] + 0.1 * s[0] * s[0];
    x[2] = s[2] - 0.2 * s[0] * s[1];
    return x;
  };
  solid.name = "bent-cube";

  double worst_lemma = 0.0;
  std::mt19937_64 rng2(kDefaultSeed ^ 0xabcdu);
  for (const PatchMap& p : {curve, sheet, solid}) {
    for (int t = 0; t < 20; ++t) {
      Eigen::VectorXd s = interior_point(p.domain, rng2);
      for (int j = 1; j <= p.k(); ++j)
        worst_lemma = std::max(worst_lemma, frame_lemma_residual(p, s, j));
    }
  }

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "recip delta max %.2e (tol 1e-8) over 11 patches x 100 pts; "
                "lemma max %.2e (tol 1e-4) for k=1,2,3",
                worst_delta, worst_lemma);
  return {worst_delta <= 1e-8 && worst_lemma <= 1e-4, buf};
}

// ---- criterion 4: the fundamental theorem ----------------------------------

struct FtcCase {
  const char* label;
  PatchMap patch;
  FieldFn g;
  FieldFn f;
};

Outcome criterion_ftc() {
  std::vector<FtcCase> cases;
  PatchMap curve =
      arc_patch(Eigen::Vector2d(0.0, 0.0), 2.0, std::numbers::pi / 3,
                std::numbers::pi);
  PatchMap sheet = bent_sheet_patch();
  PatchMap cube = identity_patch(3);

  for (const char* src :
       {"x1^3 - 2*x1*x2 + x2^2*e12", "x1*x2*e1 + x2*e2",
        "x1^2 + x2^2 + x1*e12"})
    cases.push_back({"curve", curve, one_field(2), poly_field(2, src)});
  for (const char* src :
       {"x2*x3 + x1^2*e3 - x2*e123", "x1*e1 + x3*e12", "x1*x2*x3"})
    cases.push_back({"sheet", sheet, one_field(3), poly_field(3, src)});
  for (const char* src :
       {"x1*x2 + x3^2*e2 + x1*e123", "x3*e13 + x1*x3*e2", "x2 + x1*e3"})
    cases.push_back({"cube", cube, one_field(3), poly_field(3, src)});
  cases.push_back({"sheet+g", sheet, poly_field(3, "x1 + x3*e12"),
                   poly_field(3, "x2*x3 + x1^2*e3")});

  double worst_rel = 0.0;
  double worst_ratio = std::numeric_limits<double>::infinity();
  const char* worst_case = "";
  for (const FtcCase& c : cases) {
    FtcReport pinned = ftc_check(c.g, c.f, c.patch, gl(8, 16), 1);
    if (pinned.rel_residual >= worst_rel) {
      worst_rel = pinned.rel_residual;
      worst_case = c.label;
    }

    // Convergence leg on the composite midpoint rule, where discretization
    // error is visible: halving the step must cut the residual by >= 3x
    // unless it already sits at the floating-point floor.
    QuadratureSpec coarse;
    coarse.rule = QuadRule::midpoint;
    coarse.points = 1;
    coarse.subdivisions = 16;
    FtcReport conv = ftc_check(c.g, c.f, c.patch, coarse, 2);
    double r_m = conv.table[0].abs_residual;
    double r_2m = conv.table[1].abs_residual;
    if (r_2m > 1e-10) worst_ratio = std::min(worst_ratio, r_m / r_2m);
  }

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "10 cases, max rel residual %.2e at q=8,m=16 (tol 1e-5, worst: "
                "%s); min refinement ratio %.2f (need >= 3)",
                worst_rel, worst_case, worst_ratio);
  return {worst_rel <= 1e-5 && worst_ratio >= 3.0, buf};
}

// ---- criterion 5: vanishing boundary content ------------------------------

Outcome criterion_closure() {
  double worst = 0.0;
  std::string worst_name;
  for (const PatchMap& p : shipped_patches()) {
    double v = boundary_content(p, gl(8, 8)).value.inf_norm();
    if (v >= worst) {
      worst = v;
      worst_name = p.name;
    }
  }
  for (const PatchComplex& c : {circle_boundary(1.0), sphere_boundary(1.0)}) {
    double v = boundary_content(c, gl(8, 8)).value.inf_norm();
    if (v >= worst) {
      worst = v;
      worst_name = c.parts.front().patch.name + " chain";
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max |D(boundary)| %.2e (tol 1e-8, worst: %s)", worst,
                worst_name.c_str());
  return {worst <= 1e-8, buf};
}

// ---- criterion 6: the classical theorems ----------------------------------

Outcome criterion_classical() {
  // Green on the unit square, f = (x1 x2, x1 + x2^2).  By hand:
  //   circulation = integral of (dQ/dx - dP/dy) = integral (1 - x1) = 1/2,
  //   flux        = integral of (x2 + 2 x2)              = 3/2.
  GreenReport green = greens_theorem_check(
      poly_field(2, "x1*x2*e1 + x1*e2 + x2^2*e2"), identity_patch(2),
      gl(8, 4));
  double green_err = std::max(std::abs(green.circulation_ccw - 0.5),
                              std::abs(green.curl_area_integral - 0.5));
  green_err = std::max(green_err, std::abs(green.flux_outward - 1.5));
  green_err =
      std::max(green_err, std::abs(green.divergence_area_integral - 1.5));

  // Stokes on the bent sheet with the rotation field (-x2, x1, 0), whose
  // curl is the constant (0, 0, 2).  Against the sheet's induced-boundary
  // orientation both sides equal -2 (the paired normal is minus the cross
  // product of the tangents, whose parameter-area integral has e3 part 1).
  StokesReport stokes = stokes_theorem_check(
      poly_field(3, "-x2*e1 + x1*e2"), bent_sheet_patch(), gl(8, 6));
  double stokes_err = std::max(std::abs(stokes.circulation - (-2.0)),
                               std::abs(stokes.curl_flux - (-2.0)));

  // Gauss with f = x on the unit cube: both sides exactly 3.
  GaussReport gauss = gauss_divergence_check(
      poly_field(3, "x1*e1 + x2*e2 + x3*e3"), identity_patch(3), gl(6, 2));
  double gauss_err = std::max(std::abs(gauss.divergence_integral - 3.0),
                              std::abs(gauss.flux - 3.0));

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "green err %.2e, stokes err %.2e, gauss err %.2e "
                "(each vs hand value, tol 1e-6)",
                green_err, stokes_err, gauss_err);
  return {green_err <= 1e-6 && stokes_err <= 1e-6 && gauss_err <= 1e-6, buf};
}

// ---- criterion 7: vector-derivative identities -----------------------------

Outcome criterion_identities() {
  double worst_fd = 0.0, worst_an = 0.0;
  for (int n : {2, 3, 4}) {
    for (const IdentityRow& r :
         identity_suite(n, 1000, kDefaultSeed, DerivMode::force_fd))
      worst_fd = std::max(worst_fd, r.max_rel_err);
    for (const IdentityRow& r :
         identity_suite(n, 1000, kDefaultSeed, DerivMode::automatic))
      worst_an = std::max(worst_an, r.max_rel_err);
  }

  // The k = n member of the shell family is the Cauchy kernel; certify it
  // monogenic by direct sampling as well.
  bool kernels_ok = true;
  for (int n : {2, 3, 4}) {
    std::vector<Interval> b(static_cast<std::size_t>(n), Interval{-2.0, 2.0});
    SampleSpec ss;
    ss.exclusion_radius = 0.5;
    MonogenicityReport rep = monogenicity_certificate(
        cauchy_kernel_field(n, Eigen::VectorXd::Zero(n)), KRectangle(b), ss);
    kernels_ok = kernels_ok && rep.monogenic;
  }

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "n=2,3,4 x 1000 pts: fd max %.2e (tol 1e-6), analytic max "
                "%.2e (tol 1e-12); cauchy kernels monogenic: %s",
                worst_fd, worst_an, kernels_ok ? "yes" : "NO");
  return {worst_fd <= 1e-6 && worst_an <= 1e-12 && kernels_ok, buf};
}

// ---- criterion 8: cauchy reconstruction ------------------------------------

Outcome criterion_cauchy() {
  // Constants from the circle and the sphere.
  Multivector c2{2};
  c2[0] = 1.5;
  c2[0b11] = -0.5;
  CauchyReport circle = cauchy_reconstruct(
      constant_field(2, c2), circle_boundary(1.0), Eigen::Vector2d(0.0, 0.0),
      gl(10, 8));
  Multivector c3{3};
  c3[0] = 2.0;
  c3[0b101] = 1.0;
  CauchyReport sphere = cauchy_reconstruct(
      constant_field(3, c3), sphere_boundary(1.0),
      Eigen::Vector3d(0.1, -0.05, 0.2), gl(8, 6));
  double const_err = std::max(circle.abs_err, sphere.abs_err);

  // z^2 at five interior points.
  double z2_err = 0.0;
  const double pts[5][2] = {
      {0.0, 0.0}, {0.3, -0.2}, {-0.5, 0.1}, {0.45, 0.35}, {-0.2, -0.55}};
  for (const auto& pt : pts) {
    CauchyReport rep =
        cauchy_reconstruct(complex_power_field(2), circle_boundary(1.0),
                           Eigen::Vector2d(pt[0], pt[1]), gl(10, 8));
    z2_err = std::max(z2_err, rep.abs_err);
  }

  // Full formula with the non-monogenic f(x) = x.
  Eigen::MatrixXd scale = Eigen::MatrixXd::Identity(2, 2) * 2.0;
  PatchMap square = linear_patch(scale);
  auto base = square.map;
  square.map = [base](const Eigen::VectorXd& s) {
    Eigen::VectorXd x = base(s);
    x[0] -= 1.0;
    x[1] -= 1.0;
    return x;
  };
  FullCauchyReport full = full_cauchy_formula(
      identity_field(2), square, Eigen::Vector2d(0.2, -0.3), gl(8, 24));

  char buf[220];
  std::snprintf(buf, sizeof buf,
                "constants err %.2e (tol 1e-6); z^2 at 5 pts err %.2e "
                "(tol 1e-5); full formula f=x err %.2e (tol 2e-3)",
                const_err, z2_err, full.abs_err);
  return {const_err <= 1e-6 && z2_err <= 1e-5 && full.abs_err <= 2e-3, buf};
}

// ---- criterion 9: determinism ----------------------------------------------

Outcome criterion_determinism() {
  Scenario sc = parse_scenario(R"({
    "name": "det",
    "check": "ftc",
    "patch": {"type": "figure2"},
    "f": {"type": "poly", "terms": "x2*x3 + x1^2*e3 - x2*e123"},
    "g": {"type": "poly", "terms": "x1 + x3*e12"},
    "quadrature": {"q": 6, "m": 4},
    "refinements": 2
  })");
  RunResult a = run_scenario(sc);
  RunResult b = run_scenario(sc);
  bool bytes_equal = a.csv == b.csv && !a.csv.empty();

  RunOptions threaded;
  threaded.threads = 8;
  RunResult c = run_scenario(sc, threaded);

  // Compare the threaded CSV cell by cell.
  double max_delta = 0.0;
  bool shape_ok = true;
  std::istringstream sa(a.csv), sc8(c.csv);
  std::string la, lc;
  while (std::getline(sa, la) && std::getline(sc8, lc)) {
    std::istringstream ca(la), cc(lc);
    std::string xa, xc;
    while (std::getline(ca, xa, ',') && std::getline(cc, xc, ',')) {
      if (xa == xc) continue;
      try {
        max_delta = std::max(max_delta,
                             std::abs(std::stod(xa) - std::stod(xc)));
      } catch (...) {
        shape_ok = false;
      }
    }
  }
  if (sa.rdbuf()->in_avail() != sc8.rdbuf()->in_avail()) shape_ok = false;

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "repeat run byte-identical: %s; 8-thread max cell delta %.2e "
                "(tol 1e-13)",
                bytes_equal ? "yes" : "NO", max_delta);
  return {bytes_equal && shape_ok && max_delta <= 1e-13, buf};
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    std::function<Outcome()> run;
  };
  const Entry entries[] = {
      {"1 blade products vs symbolic oracle", criterion_blades},
      {"2 product splits + distributivity", criterion_splits},
      {"3 reciprocal frames + frame lemma", criterion_frames},
      {"4 fundamental theorem (curve, sheet, cube)", criterion_ftc},
      {"5 boundary content vanishes", criterion_closure},
      {"6 green / stokes / gauss vs oracles", criterion_classical},
      {"7 vector-derivative identities", criterion_identities},
      {"8 cauchy reconstruction", criterion_cauchy},
      {"9 determinism", criterion_determinism},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("[%s] %-45s %s  (%.0f ms)\n", o.pass ? "PASS" : "FAIL",
                e.title, o.detail.c_str(), ms);
    if (!o.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
