#pragma once

#include "fic/chow.hpp"
#include "fic/deviation.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace fic {

struct NamedClass {
  std::string name;
  ChowClass ch;
};

// Three-term collection <F(-1), F(0), F(1)> with the dual triple
// <G(-1), G(0), G(1)> it pairs against.  Only the threefolds without
// middle odd cohomology carry one: P3, Q, Y5, X12.
struct ExceptionalCollection {
  FanoData X;
  std::array<NamedClass, 3> F;
  std::array<NamedClass, 3> G;

  const NamedClass& f(int i) const {
    if (i < -1 || i > 1) throw std::out_of_range("collection index");
    return F[static_cast<std::size_t>(i + 1)];
  }
  const NamedClass& g(int j) const {
    if (j < -1 || j > 1) throw std::out_of_range("collection index");
    return G[static_cast<std::size_t>(j + 1)];
  }
};

bool has_collection(const FanoData& X);

// Builds the collection, filling "solve"-marked Chern entries from the
// invariant system (exceptionality, semiorthogonality, monad homology,
// pairing matrix, Beilinson columns).  When the full system is
// contradictory (X12) the consistent core of exceptionality,
// semiorthogonality and homology decides the characters instead.
ExceptionalCollection collection_for(const FanoData& X);

// Strict solve against the full system; defined for the threefolds whose
// data carries unknown entries needing more than the core to pin down, Y5
// and X12.  On X12 the system is contradictory and this throws
// InconsistentSystem whose constraint labels witness the clash.
ExceptionalCollection solve_unknown_characters(const FanoData& X);

// Re-checks every invariant on a concrete collection: exceptionality (3
// records), semiorthogonality (3), the pairing matrix (1), and the duality
// dual(F(i)) = F(-i)(r) with r the index mod 2 (3).
std::vector<DeviationRecord> validate_collection(
    const ExceptionalCollection& coll);

// k F(-1) -> w F(0) -> k F(1); homology = w ch(F0) - k ch(F-1) - k ch(F1).
struct MonadShape {
  NamedClass left, middle, right;
  long long n = 0;
  long long k = 0;
  long long w = 0;
  ChowClass homology;
};

// Width by index: 2k + n (P3), k + n (Q), 4k + n (Y5), 3k + n (X12).
// Requires a collection, n >= 1 and k >= 1 (k >= 2 on Y5).
MonadShape monad_shape(const FanoData& X, long long n, long long k);

// Audits homology(shape) == gamma(n, k) on the shape's own characters.
DeviationRecord verify_homology_character(const MonadShape& shape,
                                          const FanoData& X);

// The same audit on the strictly solved collection.  On X12 the full
// system is contradictory and the record documents the width-row deviation
// carried by the middle Beilinson column instead.
DeviationRecord verify_homology_character(const FanoData& X, long long n,
                                          long long k);

// Beilinson table of gamma(n, k): rows are cohomological degrees 0..3,
// columns j = -1, 0, 1.  Row 1 holds -chi(gamma . G(j)); the rest vanish.
using CohomologyTable = std::array<std::array<Rational, 3>, 4>;
CohomologyTable cohomology_table(const FanoData& X, long long n, long long k);

}  // namespace fic
