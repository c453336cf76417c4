#pragma once

#include "fic/chow.hpp"
#include "fic/deviation.hpp"

#include <utility>
#include <vector>

namespace fic {

// Minimal instanton character F0: the trivial line bundle at even index,
// the spinor bundle on the quadric, and at index 1 the rank-2 bundle with
// c1 = -1 and c2 = m_g = ceil(g/2) + 1.
ChowClass minimal_character(const FanoData& X);

// ceil(g/2) + 1; index 1 only.
long long minimal_second_chern(const FanoData& X);

// gamma(n, k) = n * ch(F0) - k * ch(O_l(q - 1)); throws on n < 1.
ChowClass gamma(const FanoData& X, long long n, long long k);

// Self-duality: A == twist(dual_ch(A), -r) with r = index mod 2.
bool check_instanton_character(const ChowClass& A, const FanoData& X);

// Recovers (n, k) with A == gamma(n, k); throws NotAnInstantonCharacter.
std::pair<long long, long long> decompose(const ChowClass& A,
                                          const FanoData& X);

struct MinCharge {
  long long k0 = 0;
  // The genus-3 bound is out of the range the classification certifies;
  // the value returned is the odd-genus formula.
  bool genus3_low_confidence = false;
};

// Smallest charge k with gamma(n, k) admissible, per index:
// ceil(n/2), ceil(n/3), n, and at index 1: 0 for n = 1, else 1 (g odd) or
// n (g even).
MinCharge min_charge(const FanoData& X, long long n);

// Audits the numerical admissibility bounds at (n, k): which Euler
// characteristics must be nonpositive and the charge thresholds they pin.
std::vector<DeviationRecord> admissibility_report(const FanoData& X,
                                                  long long n, long long k);

struct DimensionResult {
  Rational dim;
  DeviationRecord record;  // engine value vs the printed closed form
};

// Expected moduli dimension 1 - chi(gamma, gamma).
DimensionResult moduli_dimension(const FanoData& X, long long n, long long k);

struct CokerResult {
  ChowClass character;  // gamma(n, k) - ch(O(-1))
  Rational dim;
  DeviationRecord record;
};

// Index >= 2 only; throws std::invalid_argument at index 1.
CokerResult coker_character(const FanoData& X, long long n, long long k);

// Subtracts `count` copies of ch(O_l(q - 1)): gamma(n, k) -> gamma(n, k + count).
ChowClass elementary_transform_character(const ChowClass& A, long long count,
                                         const FanoData& X);

// Odd index only: the charge of a rank-2n bundle with c1 = -n and the given
// c2, normalized against n copies of the minimal bundle.
long long charge_from_c2(const FanoData& X, long long n, const Rational& c2);

// ch(O(-1)) + (ch(O) - ch(O_C)) * e^{jH} for a curve C of the given degree
// and arithmetic genus.
ChowClass serre_character(const FanoData& X, const Rational& curve_degree,
                          const Rational& arithmetic_genus, long long j);

}  // namespace fic
