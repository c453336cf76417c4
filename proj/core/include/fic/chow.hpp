#pragma once

#include "fic/rational.hpp"

#include <array>
#include <optional>
#include <string>

namespace fic {

// Chern character on a Picard-rank-one Fano threefold, written in the
// basis (1, H, l, p) where H is the hyperplane class, l the line class
// with H.l = p, and p the point class.  H.H = d*l with d the degree.
struct ChowClass {
  Rational r;  // rank
  Rational a;  // H coefficient
  Rational b;  // l coefficient
  Rational c;  // p coefficient

  bool operator==(const ChowClass&) const = default;
};

struct ChernClasses {
  Rational rank, c1, c2, c3;
};

// One deformation class of the classification: index i in 1..4, degree
// d = H^3, and for index 1 the genus g with d = 2g - 2.
struct FanoData {
  std::string name;
  int index = 0;
  long long degree = 0;
  std::optional<int> genus;

  int q() const { return index / 2; }
  int r_twist() const { return index % 2; }
  Rational td2() const;       // second Todd coefficient
  ChowClass todd() const;     // (1, i/2, td2, 1)
  ChowClass c2_tangent() const;
};

// Validates the classification constraints: index 4 forces d = 1, index 3
// forces d = 2, index 2 allows d in 1..5, index 1 carries g in 3..12 with
// d = 2g - 2.  Throws std::invalid_argument on violations.
FanoData make_fano(std::string name, int index, long long degree,
                   std::optional<int> genus = std::nullopt);

ChowClass unit_class();

ChowClass operator+(const ChowClass& A, const ChowClass& B);
ChowClass operator-(const ChowClass& A, const ChowClass& B);
ChowClass operator-(const ChowClass& A);
ChowClass operator*(const Rational& t, const ChowClass& A);

ChowClass mul(const ChowClass& A, const ChowClass& B, const FanoData& X);
ChowClass twist(const ChowClass& A, long long m, const FanoData& X);
ChowClass dual_ch(const ChowClass& A);

Rational euler_char(const ChowClass& A, const FanoData& X);
Rational euler_pair(const ChowClass& A, const ChowClass& B, const FanoData& X);

// Coefficients of chi(A(t)) as a cubic in t, constant term first.
std::array<Rational, 4> hilbert_polynomial(const ChowClass& A,
                                           const FanoData& X);

// Lexicographic comparison of rank-normalized Hilbert polynomials from the
// top degree down: -1, 0, +1.  Throws std::domain_error on zero rank.
int reduced_hilbert_compare(const ChowClass& A, const ChowClass& B,
                            const FanoData& X);

// a/r; throws std::domain_error on zero rank.
Rational slope(const ChowClass& A);

// Character of a line's structure sheaf twisted by j: (0, 0, 1, j + 1 - i/2).
ChowClass line_class(long long j, const FanoData& X);

ChowClass ch_from_chern(const ChernClasses& c, const FanoData& X);
ChernClasses chern_from_ch(const ChowClass& A, const FanoData& X);

// True when rank and all three Chern classes are integers.
bool chern_integral(const ChowClass& A, const FanoData& X);

std::string to_string(const ChowClass& A);

}  // namespace fic
