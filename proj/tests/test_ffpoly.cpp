#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "orthocount/ffpoly.hpp"

using namespace orthocount;

TEST_CASE("field axioms hold exhaustively for q <= 9") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const FiniteField& F = GF(q);
    CHECK(F.q() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.pow(a, q - 1) == 1);  // multiplicative group has order q-1
      }
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
  CHECK_THROWS_AS(GF(6), std::invalid_argument);
  CHECK_THROWS_AS(GF(1), std::invalid_argument);
}

TEST_CASE("prime power structure") {
  CHECK(GF(8).characteristic() == 2);
  CHECK(GF(8).degree() == 3);
  CHECK(GF(9).characteristic() == 3);
  CHECK(GF(9).degree() == 2);
  CHECK(GF(7).degree() == 1);
}

TEST_CASE("dual polynomial") {
  const FiniteField& F2 = GF(2);
  const FiniteField& F3 = GF(3);

  Poly t_plus_1(F2, {1, 1});
  CHECK(dual(t_plus_1) == t_plus_1);  // self-dual fixed point

  Poly f(F2, {1, 1, 0, 1});  // t^3 + t + 1
  CHECK(dual(f) == Poly(F2, {1, 0, 1, 1}));  // t^3 + t^2 + 1
  CHECK(dual(dual(f)) == f);

  Poly g(F3, {2, 1, 1});  // t^2 + t + 2
  CHECK(dual(g) == Poly(F3, {2, 2, 1}));  // t^2 + 2t + 2
  CHECK(dual(dual(g)) == g);

  Poly zero_const(F2, {0, 1});  // t
  CHECK_THROWS_AS(dual(zero_const), std::domain_error);
}

TEST_CASE("irreducible enumeration small cases") {
  const FiniteField& F2 = GF(2);
  const FiniteField& F3 = GF(3);

  auto deg2_f2 = enumerate_irreducibles(2, 2);
  REQUIRE(deg2_f2.size() == 1);
  CHECK(deg2_f2[0] == Poly(F2, {1, 1, 1}));  // t^2+t+1

  auto deg3_f2 = enumerate_irreducibles(2, 3);
  REQUIRE(deg3_f2.size() == 2);
  CHECK(deg3_f2[0] == Poly(F2, {1, 1, 0, 1}));
  CHECK(deg3_f2[1] == Poly(F2, {1, 0, 1, 1}));

  auto deg1_f3 = enumerate_irreducibles(3, 1);
  REQUIRE(deg1_f3.size() == 2);  // t+1, t+2 (t itself excluded)
  CHECK(deg1_f3[0] == Poly(F3, {1, 1}));
  CHECK(deg1_f3[1] == Poly(F3, {2, 1}));
}

TEST_CASE("enumerated counts match the necklace formula") {
  for (int q : {2, 3, 4, 5}) {
    for (int d = 1; d <= (q <= 3 ? 7 : 5); ++d) {
      Integer expected = irreducible_count_formula(q, d) - (d == 1 ? 1 : 0);
      CHECK(Integer(static_cast<unsigned long>(enumerate_irreducibles(q, d).size())) == expected);
    }
  }
}

TEST_CASE("N* and M* examples") {
  CHECK(count_N_star(2, 1) == 1);
  CHECK(count_M_star(2, 1) == 0);
  CHECK(count_N_star(3, 2) == 1);  // t^2 + 1
  CHECK(count_M_star(3, 2) == 1);
  CHECK(count_N_star(2, 3) == 0);
  CHECK(count_M_star(2, 3) == 1);  // the two cubics are dual to each other

  // the single self-dual quadratic over F_3 really is t^2 + 1
  const FiniteField& F3 = GF(3);
  int found = 0;
  for (const Poly& f : enumerate_irreducibles(3, 2))
    if (f == dual(f)) {
      ++found;
      CHECK(f == Poly(F3, {1, 0, 1}));
    }
  CHECK(found == 1);
}

TEST_CASE("N(q)' has even degrees only; linear counts by parity") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CHECK(count_N_star(q, 1, CountMethod::OrbitCount) == (q % 2 ? 2 : 1));
    for (int d : {3, 5, 7}) CHECK(count_N_star(q, d, CountMethod::OrbitCount) == 0);
  }
  CHECK(count_N_star(3, 1, CountMethod::Enumeration) == 2);
  CHECK(count_N_star(2, 5, CountMethod::Enumeration) == 0);
}

TEST_CASE("partition identity 2M* + N* = #irreducibles with nonzero constant") {
  for (int q : {2, 3, 4, 5}) {
    int dmax = q == 2 ? 8 : (q == 3 ? 8 : (q == 4 ? 6 : 6));
    for (int d = 1; d <= dmax; ++d) {
      Integer total(static_cast<unsigned long>(enumerate_irreducibles(q, d).size()));
      CHECK(2 * count_M_star(q, d, CountMethod::Enumeration) +
                count_N_star(q, d, CountMethod::Enumeration) ==
            total);
    }
  }
}

TEST_CASE("orbit count agrees with enumeration across the feasible envelope") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int d = 1; d <= 12; ++d) {
      double size = 1;
      for (int i = 0; i < d; ++i) size *= q;
      if (size > 2.0e5) break;
      CHECK(count_N_star(q, d, CountMethod::OrbitCount) ==
            count_N_star(q, d, CountMethod::Enumeration));
      CHECK(count_M_star(q, d, CountMethod::OrbitCount) ==
            count_M_star(q, d, CountMethod::Enumeration));
    }
  }
}

TEST_CASE("dual is an involution on every enumerated irreducible") {
  for (int q : {2, 3, 4}) {
    for (int d = 1; d <= 4; ++d) {
      for (const Poly& f : enumerate_irreducibles(q, d)) {
        Poly fs = dual(f);
        CHECK(fs.is_monic());
        CHECK(dual(fs) == f);
      }
    }
  }
}

TEST_CASE("parameter range errors") {
  CHECK_THROWS_AS(enumerate_irreducibles(9, 12), std::domain_error);
  CHECK_THROWS_AS(count_N_star(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_irreducibles(2, 0), std::invalid_argument);
}

TEST_CASE("polynomial printing") {
  CHECK(Poly(GF(3), {2, 2, 1}).str() == "t^2+2t+2");
  CHECK(Poly(GF(2), {1, 1, 0, 1}).str() == "t^3+t+1");
}
