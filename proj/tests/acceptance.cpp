// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Checks recompute every closed form independently of the engine
// paths they audit.

#include "cli.hpp"
#include "fic/chow.hpp"
#include "fic/collections.hpp"
#include "fic/errors.hpp"
#include "fic/instanton.hpp"
#include "fic/k3.hpp"
#include "fic/kuznetsov.hpp"
#include "fic/monad_lab.hpp"
#include "fic/registry.hpp"
#include "fic/rng.hpp"
#include "fic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace fic;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

const Registry& reg() {
  static Registry r = Registry::builtin();
  return r;
}

constexpr long long kNMax = 6;
constexpr long long kKMax = 10;

template <class F>
void for_grid(F&& f) {
  for (long long n = 1; n <= kNMax; ++n) {
    for (long long k = 0; k <= kKMax; ++k) f(n, k);
  }
}

bool same_record(const DeviationRecord& a, const DeviationRecord& b) {
  return a.claim == b.claim && a.citation == b.citation &&
         a.stated == b.stated && a.engine == b.engine &&
         a.verdict == b.verdict && a.note == b.note &&
         a.provenance == b.provenance;
}

// 1: gamma on P3 equals (n, 0, -k, 0) cell by cell, under one second.
Outcome criterion_characters() {
  Outcome o;
  const auto start = Clock::now();
  const FanoData& P3 = reg().by_name("P3");
  long long cells = 0;
  for_grid([&](long long n, long long k) {
    ++cells;
    o.require(gamma(P3, n, k) == ChowClass{n, 0, -k, 0},
              "gamma(P3) open cell at n=" + std::to_string(n));
  });
  const long long elapsed = ms_since(start);
  o.require(elapsed < 1000, "overran the 1s budget");
  if (o.passed) {
    o.detail = std::to_string(cells) + " cells in " + std::to_string(elapsed) +
               " ms";
  }
  return o;
}

// 2: chi closed forms on every family, plus the spinor and minimal-bundle
// pairings, over the full grid.
Outcome criterion_chi() {
  Outcome o;
  long long checks = 0;
  for (const auto& X : reg().threefolds) {
    const ChowClass F0 = minimal_character(X);
    for_grid([&](long long n, long long k) {
      const ChowClass g = gamma(X, n, k);
      const Rational chi = euler_char(g, X);
      Rational expected;
      switch (X.index) {
        case 4: expected = n - 2 * k; break;
        case 3: expected = -k; break;
        case 2: expected = n - k; break;
        default: expected = 0; break;
      }
      ++checks;
      o.require(chi == expected, "chi(gamma) on " + X.name);
      if (X.index == 3) {
        ++checks;
        o.require(euler_pair(F0, g, X) == Rational(n - 3 * k),
                  "chi(S, gamma) on Q");
      }
      if (X.index == 1) {
        const int delta = *X.genus % 2;
        ++checks;
        o.require(euler_pair(g, F0, X) == Rational((1 - delta) * n - k),
                  "chi(gamma, F0) on " + X.name);
      }
    });
  }
  if (o.passed) o.detail = std::to_string(checks) + " identities";
  return o;
}

// 3: minimal charges match the by-family list for n <= 8, the admissibility
// audit is clean at k0, and each chi-derived bound flips exactly at k0.
Outcome criterion_min_charge() {
  Outcome o;
  long long checks = 0;
  for (const auto& X : reg().threefolds) {
    const ChowClass F0 = minimal_character(X);
    for (long long n = 1; n <= 8; ++n) {
      long long expected = 0;
      switch (X.index) {
        case 4: expected = (n + 1) / 2; break;
        case 3: expected = (n + 2) / 3; break;
        case 2: expected = n; break;
        default:
          expected = n == 1 ? 0 : (*X.genus % 2 == 1 ? 1 : n);
          break;
      }
      const MinCharge mc = min_charge(X, n);
      ++checks;
      o.require(mc.k0 == expected, "k0 list on " + X.name);
      for (const auto& rec : admissibility_report(X, n, mc.k0)) {
        ++checks;
        o.require(rec.verdict == Verdict::match,
                  "admissibility audit at k0 on " + X.name);
      }
      // The bound is the chi <= 0 threshold wherever it is derived that
      // way: P3 and Y_d via chi(gamma), Q via chi(S, gamma), even-genus
      // X_g via chi(gamma, F0).  At index 1 the n = 1 charge is 0 by the
      // existence of F0 itself, not by a chi bound.
      auto bound_chi = [&](long long k) -> Rational {
        const ChowClass g = gamma(X, n, k);
        if (X.index == 4 || X.index == 2) return euler_char(g, X);
        if (X.index == 3) return euler_pair(F0, g, X);
        return euler_pair(g, F0, X);
      };
      if (X.index != 1 || (*X.genus % 2 == 0 && n >= 2)) {
        for (long long k = 0; k <= kKMax; ++k) {
          ++checks;
          o.require((bound_chi(k) <= 0) == (k >= mc.k0),
                    "threshold flip on " + X.name);
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(checks) + " bounds";
  return o;
}

// 4: moduli dimensions equal the by-family closed forms; coker dimensions
// match on P3 and Y_d; the quadric coker row reproduces the documented
// mismatch against the chi-exact value.
Outcome criterion_dimensions() {
  Outcome o;
  long long checks = 0;
  for (const auto& X : reg().threefolds) {
    const long long d = X.degree;
    for_grid([&](long long n, long long k) {
      const DimensionResult m = moduli_dimension(X, n, k);
      Rational expected;
      switch (X.index) {
        case 4: expected = 1 - n * n + 4 * n * k; break;
        case 3: expected = 1 - n * n + 6 * n * k; break;
        case 2: expected = 2 * k * n - n * n + 1; break;
        default:
          expected = *X.genus % 2 == 0 ? 1 - n * n + 2 * n * k : 1 + 2 * n * k;
          break;
      }
      ++checks;
      o.require(m.dim == expected, "moduli dim on " + X.name);
      o.require(m.record.verdict == Verdict::match,
                "moduli record on " + X.name);
      if (X.index < 2) return;
      const CokerResult c = coker_character(X, n, k);
      ++checks;
      if (X.index == 4) {
        o.require(c.dim == Rational(n * (4 - n) + 4 * k * (n - 1)),
                  "P3 coker dim");
        o.require(c.record.verdict == Verdict::match, "P3 coker record");
      } else if (X.index == 2) {
        o.require(c.dim == Rational(n * (d + 2 - n) + 2 * k * (n - 1)),
                  "Y_d coker dim");
        o.require(c.record.verdict == Verdict::match, "Y_d coker record");
      } else {
        o.require(c.dim == Rational(n * (4 - n) + k * (6 * n - 3)),
                  "Q coker engine value");
        // The printed row differs from the chi-exact value by 2k, so the
        // documented mismatch appears at every positive charge.
        o.require(c.record.verdict ==
                      (k == 0 ? Verdict::match : Verdict::mismatch),
                  "Q coker documented mismatch");
        o.require(c.record.claim == "quadric-coker-dimension",
                  "Q coker claim key");
      }
    });
  }
  if (o.passed) o.detail = std::to_string(checks) + " dimension cells";
  return o;
}

// 5: the Lagrangian identity on the anticanonical K3 holds on every cell.
Outcome criterion_lagrangian() {
  Outcome o;
  long long checks = 0;
  for (const auto& X : reg().threefolds) {
    const K3Data S = k3_data(X);
    for_grid([&](long long n, long long k) {
      ++checks;
      o.require(lagrangian_check(X, n, k).ok, "lagrangian on " + X.name);
      const ChowClass g = gamma(X, n, k);
      const K3Class r = restrict_to_k3(g, X);
      o.require(2 * (1 - euler_pair(g, g, X)) ==
                    2 - euler_pair_k3(r, r, S),
                "lagrangian recomputation on " + X.name);
    });
  }
  if (o.passed) o.detail = std::to_string(checks) + " cells";
  return o;
}

// 6: homology characters of the monad shapes on P3, Q, Y5; the (k, w, k)
// Beilinson row; and the reproducible X12 width-row deviation.
Outcome criterion_monad_tables() {
  Outcome o;
  long long checks = 0;
  for (const char* name : {"P3", "Q", "Y5"}) {
    const FanoData& X = reg().by_name(name);
    const long long k_floor = X.index == 2 ? 2 : 1;
    for (long long n = 1; n <= kNMax; ++n) {
      for (long long k = k_floor; k <= kKMax; ++k) {
        const MonadShape shape = monad_shape(X, n, k);
        ++checks;
        o.require(shape.homology == gamma(X, n, k),
                  "homology character on " + X.name);
        o.require(verify_homology_character(X, n, k).verdict == Verdict::match,
                  "homology audit on " + X.name);
        const CohomologyTable table = cohomology_table(X, n, k);
        o.require(table[1][0] == Rational(k) && table[1][1] == Rational(shape.w) &&
                      table[1][2] == Rational(k),
                  "Beilinson row on " + X.name);
        for (std::size_t row : {0u, 2u, 3u}) {
          for (const Rational& v : table[row]) {
            o.require(v == 0, "Beilinson zero rows on " + X.name);
          }
        }
      }
    }
  }
  const FanoData& X12 = reg().by_name("X12");
  const DeviationRecord first = verify_homology_character(X12, 2, 3);
  const DeviationRecord second = verify_homology_character(X12, 2, 3);
  ++checks;
  o.require(first.claim == "x12-monad-width-row", "X12 deviation claim");
  o.require(first.verdict == Verdict::mismatch, "X12 deviation verdict");
  o.require(same_record(first, second), "X12 deviation reproducibility");
  if (o.passed) o.detail = std::to_string(checks) + " shapes";
  return o;
}

// 7: the curve-side rank column is k and the degree column matches the four
// closed forms after calibrating the sign on the Y4 row.
Outcome criterion_kuznetsov() {
  Outcome o;
  KuznetsovEngine eng;
  const DeviationRecord cal = eng.calibrate();
  o.require(cal.verdict == Verdict::match, "Y4 calibration");
  long long checks = 0;
  for (const auto& X : reg().threefolds) {
    if (!eng.has_data(X)) continue;
    for (long long n = 1; n <= kNMax; ++n) {
      const long long k_lo = std::max<long long>(1, min_charge(X, n).k0);
      for (long long k = k_lo; k <= kKMax; ++k) {
        ++checks;
        o.require(eng.phi_rank(X, n, k) == k, "rank column on " + X.name);
        const auto [rank, degree] = eng.grr_image(X, n, k);
        o.require(rank == Rational(k), "grr rank on " + X.name);
        Rational expected;
        if (X.name == "Y4") expected = 0;
        if (X.name == "X10") expected = k;
        if (X.name == "X9") expected = n + k;
        if (X.name == "X7") expected = 5 * k + n;
        o.require(degree == expected, "degree column on " + X.name);
      }
    }
  }
  if (o.passed) o.detail = std::to_string(checks) + " table cells";
  return o;
}

// 8: the explicit monad laboratory, on the wall clock.
Outcome criterion_monad_lab() {
  Outcome o;
  const auto start = Clock::now();
  const FanoData& P3 = reg().by_name("P3");
  const std::vector<std::pair<long long, long long>> pairs = {
      {2, 1}, {2, 2}, {3, 2}, {4, 2}};
  for (auto [n, k] : pairs) {
    const std::string tag =
        "(" + std::to_string(n) + ", " + std::to_string(k) + ")";
    std::vector<MonadInstance> good;
    for (std::uint64_t s = 1; s <= 20; ++s) {
      try {
        MonadInstance M = sample_monad(n, k, s);
        if (validate_monad(M).ok()) good.push_back(std::move(M));
      } catch (const SamplingExhausted&) {
      }
    }
    o.require(static_cast<long long>(good.size()) >= 19,
              "validation rate at " + tag);
    for (const auto& M : good) {
      o.require(instanton_vanishing_check(M).passed, "vanishing at " + tag);
    }
    if (good.empty()) continue;
    const MonadInstance& M = good.front();
    for (long long t = -5; t <= 5; ++t) {
      bool consistent = true;
      try {
        consistent = monad_cohomology(M, t).chi() ==
                     euler_char(twist(gamma(P3, n, k), t, P3), P3);
      } catch (const std::domain_error&) {
        consistent = false;
      }
      o.require(consistent, "chi window at " + tag);
    }
    SeededRng rng(0x616363ULL + static_cast<std::uint64_t>(10 * n + k));
    auto point = [&rng]() {
      std::array<Rational, 4> p;
      for (auto& c : p) c = rng.int_in(-9, 9);
      return p;
    };
    long long trivial = 0;
    for (int i = 0; i < 100; ++i) {
      try {
        if (line_splitting(M, point(), point()).trivial()) ++trivial;
      } catch (const std::domain_error&) {
      }
    }
    o.require(trivial >= 90, "line statistics at " + tag);
  }
  const long long elapsed = ms_since(start);
  o.require(elapsed < 120000, "overran the 2 minute budget");
  if (o.passed) o.detail = "4 pairs in " + std::to_string(elapsed) + " ms";
  return o;
}

// 9: Serre duality and bilinearity of the pairing over random classes, the
// spinor sequence identity, and orthogonality of the validated collections.
Outcome criterion_properties() {
  Outcome o;
  SeededRng rng(0x70726f7065727479ULL);
  auto coeff = [&rng]() { return Rational(rng.int_in(-9, 9)) / rng.int_in(1, 3); };
  auto draw = [&]() { return ChowClass{coeff(), coeff(), coeff(), coeff()}; };
  long long checks = 0;
  for (const auto& X : reg().threefolds) {
    for (int i = 0; i < 1000; ++i) {
      const ChowClass A = draw(), B = draw(), C = draw();
      ++checks;
      o.require(euler_pair(A, B, X) ==
                    -euler_pair(B, twist(A, -X.index, X), X),
                "Serre duality on " + X.name);
      o.require(euler_pair(A + C, B, X) ==
                    euler_pair(A, B, X) + euler_pair(C, B, X),
                "left additivity on " + X.name);
      o.require(euler_pair(A, B + C, X) ==
                    euler_pair(A, B, X) + euler_pair(A, C, X),
                "right additivity on " + X.name);
    }
  }
  const FanoData& Q = reg().by_name("Q");
  const ChowClass S = minimal_character(Q);
  ++checks;
  o.require(dual_ch(S) == Rational(4) * unit_class() - S,
            "spinor sequence identity");
  o.require(dual_ch(S) == twist(S, 1, Q), "spinor self-duality twist");
  for (const char* name : {"P3", "Q", "Y5"}) {
    for (const auto& rec :
         validate_collection(collection_for(reg().by_name(name)))) {
      ++checks;
      o.require(rec.verdict == Verdict::match,
                std::string("collection audit on ") + name);
    }
  }
  if (o.passed) o.detail = std::to_string(checks) + " property checks";
  return o;
}

// 10: the deviation audit: strict mode reports exactly the documented set;
// the default run waives it and exits 0.
Outcome criterion_deviation_audit() {
  Outcome o;
  const VerificationReport rep = verify_all(reg(), {});
  o.require(rep.unwaived_mismatches().empty(), "unwaived mismatches");
  std::set<std::string> mismatched;
  for (const auto& r : rep.records) {
    if (r.verdict == Verdict::mismatch) mismatched.insert(r.claim);
  }
  const std::set<std::string> documented(documented_deviations().begin(),
                                         documented_deviations().end());
  o.require(mismatched == documented, "strict set equals the documented set");

  std::ostringstream out, err;
  const int strict_code =
      run_cli({"verify-all", "--strict", "--monad-samples", "2",
               "--monad-lines", "4", "--draws", "10"},
              out, err);
  o.require(strict_code == 1, "strict exit code");
  const int default_code =
      run_cli({"verify-all", "--monad-samples", "2", "--monad-lines", "4",
               "--draws", "10"},
              out, err);
  o.require(default_code == 0, "default exit code");
  if (o.passed) {
    o.detail = std::to_string(rep.records.size()) + " records, " +
               std::to_string(mismatched.size()) + " documented deviations";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"P3 character display over the grid", criterion_characters},
      {"chi closed forms and pairings", criterion_chi},
      {"minimal charges and admissibility thresholds", criterion_min_charge},
      {"moduli and coker dimensions", criterion_dimensions},
      {"Lagrangian identity on the K3 section", criterion_lagrangian},
      {"monad shapes and Beilinson rows", criterion_monad_tables},
      {"curve-side rank and degree columns", criterion_kuznetsov},
      {"explicit monad laboratory", criterion_monad_lab},
      {"pairing property suites", criterion_properties},
      {"deviation audit and waiver contract", criterion_deviation_audit},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.passed;
    std::cout << (o.passed ? "[PASS]" : "[FAIL]") << " criterion "
              << (i + 1) << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  std::cout << (all ? "acceptance: all criteria pass"
                    : "acceptance: FAILURES above")
            << "\n";
  return all ? 0 : 1;
}
