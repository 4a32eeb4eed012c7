#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "orthocount/series.hpp"

using namespace orthocount;

namespace {

Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }

TruncatedSeries geometric(int order) {
  // 1/(1-z)
  return expand_product({{-1, 1, Rational(1), -1}}, order);
}

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) s.set_coeff(n, frac(num(rng), den(rng)));
  if (unit_constant && s.coeff(0).is_zero()) s.set_coeff(0, Rational(1));
  return s;
}

}  // namespace

TEST_CASE("basic arithmetic and truncation") {
  int N = 8;
  TruncatedSeries one_minus_z(N), one_plus_z(N);
  one_minus_z.set_coeff(0, Rational(1));
  one_minus_z.set_coeff(1, Rational(-1));
  one_plus_z.set_coeff(0, Rational(1));
  one_plus_z.set_coeff(1, Rational(1));

  SUBCASE("(1+z)(1-z) = 1 - z^2") {
    TruncatedSeries p = one_plus_z * one_minus_z;
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(2) == Rational(-1));
    for (int n = 3; n <= N; ++n) CHECK(p.coeff(n) == Rational(0));
  }

  SUBCASE("(1-z) * inverse(1-z) = 1") {
    CHECK(one_minus_z * one_minus_z.inverse() == TruncatedSeries::one(N));
  }

  SUBCASE("inverse(1-z) is the geometric series") {
    TruncatedSeries inv = one_minus_z.inverse();
    for (int n = 0; n <= N; ++n) CHECK(inv.coeff(n) == Rational(1));
    CHECK(inv.coeff(7) == Rational(1));
  }

  SUBCASE("inversion needs nonzero constant term") {
    TruncatedSeries z = TruncatedSeries::monomial(N, 1, Rational(1));
    CHECK_THROWS_AS(z.inverse(), std::domain_error);
  }

  SUBCASE("coefficient range is checked") {
    CHECK_THROWS_AS(one_plus_z.coeff(9), std::out_of_range);
    CHECK_THROWS_AS(one_plus_z.coeff(-1), std::out_of_range);
  }

  SUBCASE("mixed orders are rejected") {
    TruncatedSeries other(4);
    CHECK_THROWS_AS(one_plus_z * other, std::invalid_argument);
  }
}

TEST_CASE("infinite product expansions hit the exact closed-form values") {
  SUBCASE("prod_{i>=1} (1 + z/q^{2i-1}) at q=2, N=1 is 1 + (2/3) z") {
    // the z-coefficient is the full geometric sum 1/2 + 1/8 + 1/32 + ... = 2/3
    TruncatedSeries s = geometric_family_series(2, 1, 2, +1, 1, 1, 1);
    CHECK(s.coeff(0) == Rational(1));
    CHECK(s.coeff(1) == frac(2, 3));
  }

  SUBCASE("cross family contributes nothing at z^1") {
    TruncatedSeries t = cross_family_series(5, -1, 1);
    CHECK(t.coeff(0) == Rational(1));
    CHECK(t.coeff(1) == Rational(0));
  }

  SUBCASE("cross family z^2 coefficient is q/(q^2-1)^2") {
    // sum over odd s >= 3 of ((s-1)/2) q^{-s}; at q=3 this closes to 3/64
    TruncatedSeries t = cross_family_series(3, -1, 2);
    CHECK(t.coeff(2) == frac(3, 64));
  }

  SUBCASE("coefficient of z^2 in the Euler product at q=2 is 8/3") {
    TruncatedSeries t = geometric_family_series(2, 0, 1, -1, 1, -1, 2);
    CHECK(t.coeff(2) == frac(8, 3));  // 1/((1-1/2)(1-1/4))
  }

  SUBCASE("negative powers and scale > 1 in finite products") {
    // (1 - 2z)^{-1} = sum (2z)^n
    TruncatedSeries t = expand_product({{-1, 1, Rational(2), -1}}, 5);
    for (int n = 0; n <= 5; ++n) CHECK(t.coeff(n) == Rational(int_pow(2, n)));
  }

  SUBCASE("a literal partial product differs from the limit, peeling does not") {
    // The closed form is not a truncated partial product: peeling a factor
    // off the front and closing the tail reproduces it exactly.
    TruncatedSeries family = geometric_family_series(2, 1, 2, +1, 1, 1, 4);
    std::vector<ProductFactor> head = {{+1, 1, q_power(2, -1), 1}};
    CHECK(family == expand_product(head, 4) * geometric_family_series(2, 3, 2, +1, 1, 1, 4));
    std::vector<ProductFactor> partial;
    for (int a = 1; a <= 9; a += 2) partial.push_back({+1, 1, q_power(2, -a), 1});
    CHECK(expand_product(partial, 4) != family);
  }

  SUBCASE("family powers compose") {
    TruncatedSeries sq = geometric_family_series(3, 1, 2, -1, 1, 2, 6);
    TruncatedSeries lin = geometric_family_series(3, 1, 2, -1, 1, 1, 6);
    CHECK(sq == lin * lin);
    TruncatedSeries inv = geometric_family_series(3, 1, 2, -1, 1, -1, 6);
    CHECK(lin * inv == TruncatedSeries::one(6));
  }
}

TEST_CASE("multiplication is commutative and associative; inverses cancel") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 12; ++trial) {
    TruncatedSeries a = random_series(rng, 16, false);
    TruncatedSeries b = random_series(rng, 16, false);
    TruncatedSeries c = random_series(rng, 16, false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    TruncatedSeries f = random_series(rng, 16, true);
    CHECK(f * f.inverse() == TruncatedSeries::one(16));
  }
}

TEST_CASE("pow matches repeated multiplication") {
  std::mt19937 rng(7);
  TruncatedSeries f = random_series(rng, 10, true);
  TruncatedSeries acc = TruncatedSeries::one(10);
  for (int e = 0; e <= 6; ++e) {
    CHECK(f.pow(Integer(e)) == acc);
    acc = acc * f;
  }
}

TEST_CASE("graded multiplication follows the sign-group rule") {
  int N = 6;
  std::mt19937 rng(99);
  GradedSeries a(random_series(rng, N, false), random_series(rng, N, false));
  GradedSeries b(random_series(rng, N, false), random_series(rng, N, false));
  GradedSeries p = a * b;
  CHECK(p.plus() == a.plus() * b.plus() + a.minus() * b.minus());
  CHECK(p.minus() == a.plus() * b.minus() + a.minus() * b.plus());
  // summing components is multiplicative
  CHECK(p.total() == a.total() * b.total());
  // identity and powers
  CHECK(a * GradedSeries::one(N) == a);
  CHECK(a.pow(Integer(3)) == a * a * a);
}

TEST_CASE("shifted multiplies by z^k") {
  TruncatedSeries s = geometric(5).shifted(2);
  CHECK(s.coeff(0) == Rational(0));
  CHECK(s.coeff(1) == Rational(0));
  for (int n = 2; n <= 5; ++n) CHECK(s.coeff(n) == Rational(1));
}
