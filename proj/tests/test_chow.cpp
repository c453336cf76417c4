#include "fic/chow.hpp"
#include "fic/registry.hpp"
#include "fic/rng.hpp"

#include "doctest.h"

#include <array>

using namespace fic;

namespace {

ChowClass random_class(SeededRng& rng) {
  // Small integers and halves/sixths exercise the rational paths.
  auto draw = [&] { return Rational(rng.int_in(-12, 12), rng.int_in(1, 6)); };
  return ChowClass{draw(), draw(), draw(), draw()};
}

// Todd coefficients solved only from chi(O) = 1 and Serre duality
// chi(O(m)) = -chi(O(-i-m)) at m = 1, 2; independent of the c2(T) input.
ChowClass todd_from_serre(const FanoData& X) {
  const Rational d = X.degree;
  const int i = X.index;
  // chi(O(m)) = t3 + m t2 + (d/2) m^2 t1 + (d/6) m^3 with td = (1,t1,t2,t3).
  // Serre row at m: 2 t3 - i t2 + (d/2)(m^2+(i+m)^2) t1 = (d/6)((i+m)^3 - m^3).
  Rational a11 = d * (1 + (i + 1) * (i + 1)) / 2, a12 = -i;
  Rational r1 = d * ((i + 1) * (i + 1) * (i + 1) - 1) / 6 - 2;
  Rational a21 = d * (4 + (i + 2) * (i + 2)) / 2, a22 = -i;
  Rational r2 = d * ((i + 2) * (i + 2) * (i + 2) - 8) / 6 - 2;
  Rational det = a11 * a22 - a12 * a21;
  Rational t1 = (r1 * a22 - a12 * r2) / det;
  Rational t2 = (a11 * r2 - r1 * a21) / det;
  return ChowClass{1, t1, t2, 1};
}

}  // namespace

TEST_CASE("todd class agrees with the Serre-duality solve on every threefold") {
  for (const auto& X : Registry::builtin().threefolds) {
    CAPTURE(X.name);
    CHECK(X.todd() == todd_from_serre(X));
    CHECK(euler_char(unit_class(), X) == 1);
    CHECK(euler_char(twist(unit_class(), -X.index, X), X) == -1);
  }
}

TEST_CASE("td2 table") {
  Registry reg = Registry::builtin();
  CHECK(reg.by_name("P3").td2() == Rational(11, 6));
  CHECK(reg.by_name("Q").td2() == Rational(13, 6));
  CHECK(reg.by_name("Y4").td2() == Rational(7, 3));
  CHECK(reg.by_name("Y5").td2() == Rational(8, 3));
  CHECK(reg.by_name("X7").td2() == 3);
  CHECK(reg.by_name("X9").td2() == Rational(10, 3));
  CHECK(reg.by_name("X10").td2() == Rational(7, 2));
  CHECK(reg.by_name("X12").td2() == Rational(23, 6));
}

TEST_CASE("ring laws hold on random classes") {
  SeededRng rng(20260819);
  for (const auto& X : Registry::builtin().threefolds) {
    for (int trial = 0; trial < 50; ++trial) {
      ChowClass A = random_class(rng), B = random_class(rng),
                C = random_class(rng);
      CHECK(mul(A, B, X) == mul(B, A, X));
      CHECK(mul(mul(A, B, X), C, X) == mul(A, mul(B, C, X), X));
      CHECK(mul(A, unit_class(), X) == A);
      CHECK(mul(A + B, C, X) == mul(A, C, X) + mul(B, C, X));
      CHECK(dual_ch(mul(A, B, X)) == mul(dual_ch(A), dual_ch(B), X));
      CHECK(dual_ch(dual_ch(A)) == A);
    }
  }
}

TEST_CASE("twist is multiplication by the line-bundle character") {
  SeededRng rng(7);
  for (const auto& X : Registry::builtin().threefolds) {
    for (int trial = 0; trial < 25; ++trial) {
      ChowClass A = random_class(rng);
      long long m = rng.int_in(-5, 5), m2 = rng.int_in(-5, 5);
      CHECK(twist(A, m, X) == mul(A, twist(unit_class(), m, X), X));
      CHECK(mul(twist(unit_class(), m, X), twist(unit_class(), m2, X), X) ==
            twist(unit_class(), m + m2, X));
      CHECK(twist(twist(A, m, X), -m, X) == A);
      CHECK(dual_ch(twist(A, m, X)) == twist(dual_ch(A), -m, X));
    }
  }
}

TEST_CASE("euler characteristic of line bundles on P3 is binomial") {
  const FanoData P3 = Registry::builtin().by_name("P3");
  for (long long m = -8; m <= 8; ++m) {
    Rational expected =
        Rational((m + 1) * (m + 2) * (m + 3), 6);
    CHECK(euler_char(twist(unit_class(), m, P3), P3) == expected);
  }
}

TEST_CASE("Serre duality and bilinearity of the Euler pairing") {
  SeededRng rng(421);
  for (const auto& X : Registry::builtin().threefolds) {
    for (int trial = 0; trial < 1000; ++trial) {
      ChowClass A = random_class(rng), B = random_class(rng);
      CHECK(euler_pair(A, B, X) ==
            -euler_pair(B, twist(A, -X.index, X), X));
    }
    for (int trial = 0; trial < 200; ++trial) {
      ChowClass A = random_class(rng), B = random_class(rng),
                C = random_class(rng);
      CHECK(euler_pair(A + B, C, X) ==
            euler_pair(A, C, X) + euler_pair(B, C, X));
      CHECK(euler_pair(A, B + C, X) ==
            euler_pair(A, B, X) + euler_pair(A, C, X));
    }
  }
}

TEST_CASE("hilbert polynomial") {
  Registry reg = Registry::builtin();
  const FanoData P3 = reg.by_name("P3");

  SUBCASE("unit on P3 is (t+1)(t+2)(t+3)/6") {
    auto p = hilbert_polynomial(unit_class(), P3);
    CHECK(p == std::array<Rational, 4>{1, Rational(11, 6), 1, Rational(1, 6)});
  }

  SUBCASE("line class has chi(t) = t + j + 1") {
    for (const auto& X : reg.threefolds) {
      for (long long j = -3; j <= 3; ++j) {
        auto p = hilbert_polynomial(line_class(j, X), X);
        CHECK(p == std::array<Rational, 4>{Rational(j + 1), 1, 0, 0});
      }
    }
  }

  SUBCASE("leading coefficient is r d / 6") {
    SeededRng rng(99);
    for (const auto& X : reg.threefolds) {
      ChowClass A = random_class(rng);
      CHECK(hilbert_polynomial(A, X)[3] == A.r * X.degree / 6);
    }
  }
}

TEST_CASE("reduced hilbert comparison") {
  const FanoData P3 = Registry::builtin().by_name("P3");
  ChowClass O = unit_class(), O1 = twist(O, 1, P3);
  CHECK(reduced_hilbert_compare(O, O1, P3) == -1);
  CHECK(reduced_hilbert_compare(O1, O, P3) == 1);
  CHECK(reduced_hilbert_compare(O + O, 3 * O, P3) == 0);
  CHECK_THROWS_AS(reduced_hilbert_compare(line_class(0, P3), O, P3),
                  std::domain_error);
}

TEST_CASE("slope") {
  const FanoData P3 = Registry::builtin().by_name("P3");
  for (long long m = -3; m <= 3; ++m) {
    CHECK(slope(twist(unit_class(), m, P3)) == m);
  }
  CHECK_THROWS_AS(slope(line_class(0, P3)), std::domain_error);
}

TEST_CASE("line class normalization") {
  Registry reg = Registry::builtin();
  CHECK(line_class(-1, reg.by_name("P3")) == ChowClass{0, 0, 1, -2});
  CHECK(line_class(0, reg.by_name("Q")) == ChowClass{0, 0, 1, Rational(-1, 2)});
}

TEST_CASE("chern conversions round-trip") {
  Registry reg = Registry::builtin();
  const FanoData P3 = reg.by_name("P3");

  SUBCASE("tangent bundle of P3") {
    ChowClass T = ch_from_chern(ChernClasses{3, 4, 6, 4}, P3);
    CHECK(T == ChowClass{3, 4, 2, Rational(2, 3)});
    ChernClasses back = chern_from_ch(T, P3);
    CHECK(back.c1 == 4);
    CHECK(back.c2 == 6);
    CHECK(back.c3 == 4);
    CHECK(chern_integral(T, P3));
  }

  SUBCASE("random round trips") {
    SeededRng rng(5150);
    for (const auto& X : reg.threefolds) {
      for (int trial = 0; trial < 20; ++trial) {
        ChernClasses c{Rational(rng.int_in(1, 6)), Rational(rng.int_in(-6, 6)),
                       Rational(rng.int_in(-20, 20)),
                       Rational(rng.int_in(-20, 20))};
        ChernClasses back = chern_from_ch(ch_from_chern(c, X), X);
        CHECK(back.rank == c.rank);
        CHECK(back.c1 == c.c1);
        CHECK(back.c2 == c.c2);
        CHECK(back.c3 == c.c3);
      }
    }
  }
}

TEST_CASE("classification constraints on FanoData") {
  CHECK_THROWS_AS(make_fano("bad", 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_fano("bad", 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_fano("bad", 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_fano("bad", 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_fano("bad", 1, 10, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_fano("bad", 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_fano("bad", 2, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_fano("bad", 5, 1), std::invalid_argument);
  FanoData X5 = make_fano("X5", 1, 8, 5);
  CHECK(X5.q() == 0);
  CHECK(X5.r_twist() == 1);
}
