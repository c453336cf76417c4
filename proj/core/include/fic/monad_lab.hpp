#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fic/linalg.hpp"
#include "fic/rational.hpp"

namespace fic {

// Matrix of homogeneous linear forms in x0..x3; entry (i, j) is
// sum_v coeff[v].at(i, j) * x_v. Coefficients stay exact; a prime-field
// working field only changes how ranks are computed downstream.
struct LinearFormMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::array<Matrix<Rational>, 4> coeff;

  LinearFormMatrix() = default;
  LinearFormMatrix(std::size_t r, std::size_t c);

  Matrix<Rational> evaluate(const std::array<Rational, 4>& point) const;
  LinearFormMatrix transpose() const;

  bool operator==(const LinearFormMatrix& other) const;
};

inline constexpr char kFieldRational[] = "rational";
inline constexpr char kFieldPrime[] = "fp-2147483647";

// Monad O(-1)^k --A--> O^w --B--> O(1)^k on P^3 with w = 2k + n and
// B o A = 0 identically; its middle homology carries gamma(n, k).
struct MonadInstance {
  long long n = 0;
  long long k = 0;
  long long w = 0;
  LinearFormMatrix A;  // w x k
  LinearFormMatrix B;  // k x w
  std::uint64_t seed = 0;
  std::string field = kFieldRational;
  int attempts = 1;  // sampling rounds consumed
};

// Draws B with integer coefficients in [-9, 9], solves the linear system
// B o A = 0 for the columns of A over the rationals, and retries with a
// fresh B until the instance validates. Preconditions: n >= 1 and
// k >= ceil(n / 2). Throws SamplingExhausted when the retry budget runs
// out, which signals a regime where a generic B admits no monad.
MonadInstance sample_monad(long long n, long long k, std::uint64_t seed,
                           const std::string& field = kFieldRational);

struct ValidationReport {
  bool composition_zero = false;     // B o A = 0 as forms, checked exactly
  bool fibrewise_injective = false;  // A full column rank at sampled points
  bool fibrewise_surjective = false; // B full row rank at sampled points
  int points_checked = 0;

  bool ok() const {
    return composition_zero && fibrewise_injective && fibrewise_surjective;
  }
};

// Probabilistic fibrewise certificate: exact composition check plus rank
// checks of A and B at n_points random points.
ValidationReport validate_monad(const MonadInstance& M, int n_points = 50,
                                std::uint64_t point_seed = 0x5053414d504cULL);

struct CohomologyRow {
  long long h0 = 0;
  long long h1 = 0;
  long long h2 = 0;
  long long h3 = 0;

  long long chi() const { return h0 - h1 + h2 - h3; }
  bool operator==(const CohomologyRow&) const = default;
};

// Sheaf cohomology of the homology bundle twisted by t, via ranks of the
// multiplication maps of B, A and their transposes on monomial bases.
// Postcondition: the alternating sum equals chi(gamma(n, k)(t)); a
// mismatch after exact recomputation means the instance degenerates and
// raises std::domain_error.
CohomologyRow monad_cohomology(const MonadInstance& M, long long t);

struct VanishingReport {
  bool passed = false;
  std::vector<std::string> failures;  // offending cohomology entries
};

// h^1(E(-2)) = h^1(E(-3)) = h^2(E(-2)) = h^2(E(-1)) = 0 together with
// h^i(E(-2)) = 0 for all i.
VanishingReport instanton_vanishing_check(const MonadInstance& M);

// Splitting type of E restricted to the line through p and q: degrees
// sorted descending, summing to zero. Trivial iff h^0(E|_l(-1)) = 0,
// detected as B(q) * A(p) having full rank k. Throws std::domain_error
// when p and q do not span a line and std::runtime_error when the
// recovered multiplicities are inconsistent (a degenerate restriction).
struct SplittingType {
  std::vector<long long> degrees;

  bool trivial() const;
  bool operator==(const SplittingType&) const = default;
};

SplittingType line_splitting(const MonadInstance& M,
                             const std::array<Rational, 4>& p,
                             const std::array<Rational, 4>& q);

// Serialization: schema fic-monad/1, exact coefficient strings, sorted
// keys; the hash is FNV-1a over the canonical dump, stable across runs.
std::string to_json(const MonadInstance& M);
MonadInstance monad_from_json(const std::string& text);
std::string content_hash(const MonadInstance& M);

}  // namespace fic
