#include <doctest.h>

#include <random>
#include <vector>

#include <gcalc/multivector.hpp>
#include <gcalc/mv_format.hpp>

#include "blade_oracle.hpp"

using namespace gcalc;

TEST_CASE("blade product signs match the sorting oracle exhaustively, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const BladeIndex count = BladeIndex{1} << n;
    for (BladeIndex a = 0; a < count; ++a) {
      for (BladeIndex b = 0; b < count; ++b) {
        auto [sign, mask] = oracle::blade_product_masks(a, b);
        CHECK(mask == (a ^ b));
        CHECK(blade_product_sign(a, b) == sign);
      }
    }
  }
}

TEST_CASE("single-blade geometric products agree with the oracle") {
  for (int n = 1; n <= 5; ++n) {
    const BladeIndex count = BladeIndex{1} << n;
    for (BladeIndex a = 0; a < count; ++a) {
      for (BladeIndex b = 0; b < count; ++b) {
        Multivector p =
            Multivector::blade(n, a, 2.0) * Multivector::blade(n, b, 3.0);
        auto [sign, mask] = oracle::blade_product_masks(a, b);
        for (BladeIndex c = 0; c < count; ++c)
          CHECK(p[c] == (c == mask ? 6.0 * sign : 0.0));
      }
    }
  }
}

TEST_CASE("reverse signs match the oracle") {
  for (int n = 1; n <= 6; ++n) {
    const BladeIndex count = BladeIndex{1} << n;
    for (BladeIndex b = 0; b < count; ++b) {
      Multivector r = reverse(Multivector::blade(n, b));
      CHECK(r[b] == oracle::reverse_sign(b));
      CHECK(reverse_sign(grade_of(b)) == oracle::reverse_sign(b));
    }
  }
}

namespace {

Multivector random_mv(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Multivector m{dim};
  for (BladeIndex b = 0; b < m.coeff_count(); ++b) m[b] = u(rng);
  return m;
}

}  // namespace

TEST_CASE("product splits: a b = sum over grades of inner + outer structure") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      Multivector a = random_mv(n, rng);
      Multivector b = random_mv(n, rng);

      // For homogeneous parts A_r, B_s the geometric product splits into
      // grades |r-s|, |r-s|+2, ..., r+s; inner picks |r-s| (zero when r or s
      // is 0), outer picks r+s.
      Multivector inner_sum{n};
      Multivector outer_sum{n};
      for (int r = 0; r <= n; ++r) {
        for (int s = 0; s <= n; ++s) {
          Multivector part = a.grade(r) * b.grade(s);
          if (r != 0 && s != 0) inner_sum += part.grade(std::abs(r - s));
          outer_sum += part.grade(r + s);
        }
      }
      CHECK((inner_product(a, b) - inner_sum).inf_norm() <= 1e-12);
      CHECK((outer_product(a, b) - outer_sum).inf_norm() <= 1e-12);
    }
  }
}

TEST_CASE("geometric product is associative and distributive") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      Multivector a = random_mv(n, rng);
      Multivector b = random_mv(n, rng);
      Multivector c = random_mv(n, rng);
      CHECK(((a * b) * c - a * (b * c)).inf_norm() <= 1e-12);
      CHECK((a * (b + c) - (a * b + a * c)).inf_norm() <= 1e-12);
    }
  }
}

TEST_CASE("reverse is an anti-automorphism") {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 5; ++n) {
    Multivector a = random_mv(n, rng);
    Multivector b = random_mv(n, rng);
    CHECK((reverse(a * b) - reverse(b) * reverse(a)).inf_norm() <= 1e-12);
  }
}

TEST_CASE("blade inverse") {
  // (e1 + 2 e2) has inverse (e1 + 2 e2) / 5.
  Multivector v{3};
  v[0b001] = 1.0;
  v[0b010] = 2.0;
  Multivector vi = blade_inverse(v);
  Multivector prod = v * vi;
  CHECK(prod.scalar_part() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((prod - Multivector::scalar(3, 1.0)).inf_norm() <= 1e-14);

  // Scaled bivector blade.
  Multivector b = Multivector::blade(4, 0b0110, -2.5);
  CHECK((b * blade_inverse(b) - Multivector::scalar(4, 1.0)).inf_norm() <=
        1e-14);

  CHECK_THROWS_AS(blade_inverse(Multivector{3}), SingularBlade);
  // 1 + e12 is not a blade: (1 + e12)(1 - e12) = 2 has grade mixing upstream.
  Multivector notblade = Multivector::scalar(3, 1.0);
  notblade[0b011] = 1.0;
  CHECK_THROWS_AS(blade_inverse(notblade), SingularBlade);
}

TEST_CASE("pseudoscalar and determinant") {
  for (int n = 1; n <= 6; ++n) {
    Multivector i = pseudoscalar(n);
    Multivector ii = pseudoscalar_inverse(n);
    CHECK((i * ii - Multivector::scalar(n, 1.0)).inf_norm() == 0.0);
    CHECK((ii * i - Multivector::scalar(n, 1.0)).inf_norm() == 0.0);
    // I^2 = (-1)^(n(n-1)/2).
    double isq = (i * i).scalar_part();
    CHECK(isq == (reverse_sign(n) > 0 ? 1.0 : -1.0));
  }
  Multivector top = Multivector::blade(3, 0b111, 4.5);
  CHECK(determinant(top) == doctest::Approx(4.5));
  CHECK_THROWS_AS(determinant(Multivector::basis_vector(3, 1)), DomainError);
}

TEST_CASE("grade bookkeeping") {
  Multivector m{3};
  m[0] = 1.0;
  m[0b011] = 2.0;
  CHECK(!m.is_homogeneous(0));
  CHECK(!m.homogeneous_grade().has_value());
  CHECK(m.grade(2)[0b011] == 2.0);
  CHECK(m.grade(2).is_homogeneous(2));
  CHECK(Multivector{3}.is_homogeneous(1));
  CHECK(Multivector{3}.homogeneous_grade() == 0);
  CHECK(m.grade(7).is_zero());
}

TEST_CASE("euler decomposition of a vector pair") {
  Multivector a = Multivector::basis_vector(3, 1) * 2.0;
  Multivector b = Multivector::basis_vector(3, 2) * 3.0;
  EulerDecomposition e = euler_decompose(a, b);
  CHECK(e.magnitude == doctest::Approx(6.0));
  CHECK(e.angle == doctest::Approx(std::numbers::pi / 2));
  CHECK(!e.parallel);
  CHECK((e.plane * e.plane + Multivector::scalar(3, 1.0)).inf_norm() <= 1e-12);
  // a b = |a||b| (cos t + i sin t) reconstructs the product.
  Multivector rhs = Multivector::scalar(3, e.magnitude * std::cos(e.angle)) +
                    e.plane * (e.magnitude * std::sin(e.angle));
  CHECK((a * b - rhs).inf_norm() <= 1e-12);

  EulerDecomposition par = euler_decompose(a, a * -1.5);
  CHECK(par.parallel);
  CHECK(par.angle == doctest::Approx(std::numbers::pi));
}

TEST_CASE("mismatched algebras are rejected") {
  Multivector a{2};
  Multivector b{3};
  CHECK_THROWS_AS(a + b, SignatureMismatch);
  CHECK_THROWS_AS(a * b, SignatureMismatch);
}

TEST_CASE("format / parse round trip") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      Multivector m = random_mv(n, rng);
      Multivector back = parse_multivector(format_multivector(m), n);
      CHECK(back == m);
    }
  }
  CHECK(format_multivector(Multivector{4}) == "0");
  CHECK(format_multivector(Multivector::scalar(2, -1.25)) == "-1.25");
  Multivector m{3};
  m[0b011] = 1.0;
  m[0b100] = -2.0;
  CHECK(format_multivector(m) == "e12 - 2*e3");

  Multivector p = parse_multivector("0.5 + 1.5*e12 - 2*e3", 3);
  CHECK(p[0] == 0.5);
  CHECK(p[0b011] == 1.5);
  CHECK(p[0b100] == -2.0);

  CHECK_THROWS_AS(parse_multivector("e21", 3), ParseError);
  CHECK_THROWS_AS(parse_multivector("e4", 3), ParseError);
  CHECK_THROWS_AS(parse_multivector("1 +", 3), ParseError);
  CHECK_THROWS_AS(parse_multivector("2*", 3), ParseError);
}
