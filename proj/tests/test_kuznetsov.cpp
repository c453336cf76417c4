#include "fic/kuznetsov.hpp"

#include "fic/errors.hpp"
#include "fic/instanton.hpp"
#include "fic/registry.hpp"

#include "doctest.h"

#include <utility>

using namespace fic;

namespace {

const Registry& reg() {
  static Registry r = Registry::builtin();
  return r;
}

KuznetsovEngine& engine() {
  static KuznetsovEngine e = [] {
    KuznetsovEngine fresh;
    fresh.calibrate();
    return fresh;
  }();
  return e;
}

ChowClass cls(long long r, const Rational& a, const Rational& b,
              const Rational& c) {
  return ChowClass{r, a, b, c};
}

}  // namespace

TEST_CASE("product ring laws") {
  const FanoData& Y4 = reg().by_name("Y4");
  const Rational eta_sq = 4;
  const ProductClass A{cls(2, 1, 0, Rational(-1) / 3), cls(3, 1, -1, 0), 1};
  const ProductClass B{cls(1, -1, 2, 0), cls(0, 2, 0, 1), -2};

  SUBCASE("commutative with the eta square landing in beta.c") {
    const ProductClass AB = pmul(A, B, Y4, eta_sq);
    const ProductClass BA = pmul(B, A, Y4, eta_sq);
    CHECK(AB == BA);
    // strip the odd part and compare: the eta contribution is s_A s_B e
    ProductClass A0 = A;
    ProductClass B0 = B;
    A0.s = 0;
    B0.s = 0;
    const ProductClass even = pmul(A0, B0, Y4, eta_sq);
    CHECK(AB.beta.c - even.beta.c == Rational(1) * Rational(-2) * eta_sq);
  }
  SUBCASE("dual is an involution") {
    CHECK(pdual(pdual(A)) == A);
    CHECK(pdual(pdual(B)) == B);
  }
  SUBCASE("pullbacks and pushforward") {
    const auto from_x = q_push(p_pull(cls(1, 2, 3, 4)));
    CHECK(from_x.first == Rational(4));
    CHECK(from_x.second == Rational(0));
    const auto from_curve = q_push(q_pull(5, 7));
    CHECK(from_curve.first == Rational(0));
    CHECK(from_curve.second == Rational(0));
    // eta alone integrates to zero
    const auto odd = q_push(ProductClass{ChowClass{}, ChowClass{}, 3});
    CHECK(odd.first == Rational(0));
    CHECK(odd.second == Rational(0));
  }
  SUBCASE("projection formula for q") {
    // q_push(A . q_pull(t)) = q_push(A) . t with t = r + d pt
    const Rational r = 2, d = -3;
    const ProductClass t = q_pull(r, d);
    const auto lhs = q_push(pmul(A, t, Y4, eta_sq));
    const auto base = q_push(A);
    CHECK(lhs.first == base.first * r);
    CHECK(lhs.second == base.second * r + base.first * d);
  }
}

TEST_CASE("fiber characters match the displayed data") {
  CHECK(engine().fiber_character(reg().by_name("Y4")) ==
        cls(2, 1, 0, Rational(-1) / 3));
  CHECK(engine().fiber_character(reg().by_name("X10")) ==
        cls(3, 2, 9, Rational(1) / 2));
  CHECK(engine().fiber_character(reg().by_name("X9")) ==
        cls(2, 1, 2, Rational(-1) / 3));
  CHECK(engine().fiber_character(reg().by_name("X7")) ==
        cls(2, 1, 1, Rational(-1) / 2));

  CHECK(engine().has_data(reg().by_name("X7")));
  CHECK_FALSE(engine().has_data(reg().by_name("P3")));
  CHECK_THROWS_AS(engine().data(reg().by_name("Q")), std::invalid_argument);

  // curve genus bookkeeping: the plane-quartic genus is derived, not quoted
  CHECK(engine().data(reg().by_name("X9")).curve_genus == 3);
  CHECK(engine().data(reg().by_name("X9")).curve_genus_derived);
  CHECK_FALSE(engine().data(reg().by_name("Y4")).curve_genus_derived);
}

TEST_CASE("phi rank equals the charge on the whole grid") {
  for (const char* name : {"Y4", "X10", "X9", "X7"}) {
    const FanoData& X = reg().by_name(name);
    for (long long n = 1; n <= 6; ++n) {
      for (long long k = 1; k <= 10; ++k) {
        CAPTURE(name);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(engine().phi_rank(X, n, k) == k);
      }
    }
  }
  CHECK_THROWS_AS(engine().phi_rank(reg().by_name("Y4"), 2, 0),
                  std::invalid_argument);
}

TEST_CASE("calibration fixes the eta square sign on the degree-zero row") {
  KuznetsovEngine fresh;
  CHECK_FALSE(fresh.calibrated());
  CHECK_THROWS_AS(fresh.grr_image(reg().by_name("Y4"), 1, 1),
                  UncalibratedSign);
  CHECK_THROWS_AS(fresh.universal_character(reg().by_name("Y4")),
                  UncalibratedSign);
  CHECK_THROWS_AS(fresh.eta_sign(), UncalibratedSign);

  const DeviationRecord rec = fresh.calibrate();
  CHECK(rec.claim == "grr-calibration-y4");
  CHECK(rec.verdict == Verdict::match);
  CHECK(rec.provenance == "calibration");
  CHECK(fresh.eta_sign() == 1);

  // phi_rank is sign-independent and usable before calibration
  KuznetsovEngine uncalibrated;
  CHECK(uncalibrated.phi_rank(reg().by_name("X7"), 3, 2) == 2);
}

TEST_CASE("curve-side rank and degree follow the table") {
  struct Row {
    const char* name;
    long long (*deg)(long long, long long);
  };
  const Row rows[] = {
      {"Y4", [](long long, long long) -> long long { return 0; }},
      {"X10", [](long long, long long k) -> long long { return k; }},
      {"X9", [](long long n, long long k) -> long long { return n + k; }},
      {"X7", [](long long n, long long k) -> long long { return 5 * k + n; }},
  };
  for (const Row& row : rows) {
    const FanoData& X = reg().by_name(row.name);
    for (long long n = 1; n <= 6; ++n) {
      for (long long k = 1; k <= 10; ++k) {
        CAPTURE(row.name);
        CAPTURE(n);
        CAPTURE(k);
        const auto [rank, degree] = engine().grr_image(X, n, k);
        CHECK(rank == Rational(k));
        CHECK(degree == Rational(row.deg(n, k)));
        CHECK(rank == Rational(engine().phi_rank(X, n, k)));
      }
    }
  }
}

TEST_CASE("universal characters restrict to their fibers") {
  for (const char* name : {"Y4", "X10", "X9", "X7"}) {
    const FanoData& X = reg().by_name(name);
    CAPTURE(name);
    const ProductClass chE = engine().universal_character(X);
    CHECK(chE.alpha == engine().fiber_character(X));
    CHECK(chE.s == Rational(-1));
  }
  // frozen curve-side component on Y4 and X9 under the calibrated sign
  CHECK(engine().universal_character(reg().by_name("Y4")).beta ==
        cls(3, 1, -1, Rational(-1) / 3));
  CHECK(engine().universal_character(reg().by_name("X9")).beta ==
        cls(5, 2, 1, Rational(-7) / 6));
}

TEST_CASE("resolution characters agree with the reverse pushforward") {
  SUBCASE("Y4 extends by k - n trivial summands") {
    const FanoData& Y4 = reg().by_name("Y4");
    for (long long n = 1; n <= 5; ++n) {
      for (long long k = n; k <= 8; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        const auto rec = engine().resolution_character_check(Y4, n, k);
        CHECK(rec.claim == "resolution-y4");
        CHECK(rec.verdict == Verdict::match);
        CHECK(rec.note.find("e = " + to_string(Rational(k - n))) !=
              std::string::npos);
        // the extension count is the pairing against the companion
        const ChowClass tw = twist(gamma(Y4, n, k), 0, Y4);
        CHECK(euler_pair(tw, unit_class(), Y4) == Rational(n - k));
      }
    }
    CHECK_THROWS_AS(engine().resolution_character_check(Y4, 3, 2),
                    std::invalid_argument);
  }
  SUBCASE("X9 concentrates in degree two with e = k") {
    const FanoData& X9 = reg().by_name("X9");
    for (long long n = 1; n <= 5; ++n) {
      for (long long k = 1; k <= 8; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        const auto rec = engine().resolution_character_check(X9, n, k);
        CHECK(rec.claim == "resolution-x9");
        CHECK(rec.verdict == Verdict::match);
        CHECK(rec.note.find("e = " + to_string(Rational(k))) !=
              std::string::npos);
        CHECK(rec.note.find("concentration degree 2") != std::string::npos);
      }
    }
  }
  SUBCASE("unpublished companions are skipped, not guessed") {
    const auto x7 = engine().resolution_character_check(
        reg().by_name("X7"), 2, 2);
    CHECK(x7.claim == "resolution-x7");
    CHECK(x7.verdict == Verdict::skipped);
    const auto x10 = engine().resolution_character_check(
        reg().by_name("X10"), 2, 2);
    CHECK(x10.claim == "resolution-x10");
    CHECK(x10.verdict == Verdict::skipped);
  }
}

TEST_CASE("fiber resolutions check out where displayed") {
  SUBCASE("Y4 fiber is globally generated with chi = 4") {
    const auto recs = engine().universal_fiber_checks(reg().by_name("Y4"));
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].claim == "universal-fiber-y4");
    CHECK(recs[0].verdict == Verdict::match);
    CHECK(recs[0].stated == "(4, 0, 0, 0)");
  }
  SUBCASE("X9 fiber matches the conic embedding sequence") {
    const auto recs = engine().universal_fiber_checks(reg().by_name("X9"));
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].claim == "universal-fiber-x9");
    CHECK(recs[0].verdict == Verdict::match);
    CHECK(recs[0].engine == "(2, 1, 2, -1/3)");
  }
  SUBCASE("X10 is marked out of scope and X7 has nothing displayed") {
    const auto x10 = engine().universal_fiber_checks(reg().by_name("X10"));
    REQUIRE(x10.size() == 1);
    CHECK(x10[0].claim == "universal-fiber-x10");
    CHECK(x10[0].verdict == Verdict::skipped);
    CHECK(engine().universal_fiber_checks(reg().by_name("X7")).empty());
  }
}

TEST_CASE("derived companion on X9 is exceptional with integral Chern data") {
  const FanoData& X9 = reg().by_name("X9");
  const ChowClass U = *engine().data(X9).companion.ch;
  CHECK(U == cls(3, -1, 0, Rational(1) / 3));
  CHECK(dual_ch(U) == cls(3, 1, 0, Rational(-1) / 3));
  CHECK(euler_pair(U, U, X9) == Rational(1));
  const ChernClasses chern = chern_from_ch(U, X9);
  CHECK(chern.c2 == Rational(8));
  CHECK(chern_integral(U, X9));
}
