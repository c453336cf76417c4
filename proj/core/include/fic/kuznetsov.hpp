#pragma once

#include "fic/chow.hpp"
#include "fic/deviation.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fic {

// Class on X x Gamma of the shape alpha (x) 1 + beta (x) pt + s eta, with
// Gamma a smooth curve.  The odd class eta pairs to zero against every even
// class of positive degree on the X side; only eta . eta survives the
// pushforward, as eta_sq * (p (x) pt).
struct ProductClass {
  ChowClass alpha;
  ChowClass beta;
  Rational s;

  bool operator==(const ProductClass&) const = default;
};

ProductClass operator+(const ProductClass& A, const ProductClass& B);
ProductClass operator-(const ProductClass& A, const ProductClass& B);
ProductClass operator*(const Rational& t, const ProductClass& A);

ProductClass pmul(const ProductClass& A, const ProductClass& B,
                  const FanoData& X, const Rational& eta_sq);
ProductClass pdual(const ProductClass& A);

ProductClass p_pull(const ChowClass& A);
ProductClass q_pull(const Rational& rank, const Rational& degree);

// Integration over X: (coefficient of p (x) 1, coefficient of p (x) pt),
// read on Gamma as (rank, degree).  eta integrates to zero.
std::pair<Rational, Rational> q_push(const ProductClass& A);

struct CompanionData {
  std::string name;
  long long rank = 0;
  std::optional<ChowClass> ch;  // absent when the character is unpublished
  std::string status;           // "known", "derived" or "skip"
};

// Chern data of one universal sheaf on X x Gamma, as displayed: rank,
// c1 = c1_h H + c1_pt pt, c2 = c2_l l + c2_hpt H.pt + c2_eta eta,
// c3 = c3_p p + c3_lpt l.pt, together with |integral of eta^2| and the
// companion object of the curve-side component.
struct UniversalSheafData {
  std::string name;
  int curve_genus = 0;
  bool curve_genus_derived = false;
  long long rank = 0;
  Rational c1_h, c1_pt;
  Rational c2_l, c2_hpt, c2_eta;
  Rational c3_p, c3_lpt;
  long long eta_sq_magnitude = 0;
  CompanionData companion;
  std::string source;
};

// Pushforward numerics for the curve-side components of the four tilted
// threefolds Y4, X10, X9, X7.  The orientation of eta is not part of the
// displayed data; calibrate() fixes it on the Y4 row, where the resulting
// sheaf on Gamma has degree zero, and every later row reuses that sign.
class KuznetsovEngine {
 public:
  KuznetsovEngine();

  bool has_data(const FanoData& X) const;
  const UniversalSheafData& data(const FanoData& X) const;

  // ch of the sheaf's restriction to X x {point}; sign-independent.
  ChowClass fiber_character(const FanoData& X) const;

  // Full ch on the product; requires the calibrated sign for the eta^2
  // term inside ch_4.
  ProductClass universal_character(const FanoData& X) const;

  // rank of the curve-side image of E(r), as -chi(E_y, E(r)); k >= 1.
  long long phi_rank(const FanoData& X, long long n, long long k) const;

  // Fixes the eta^2 sign against the degree-zero Y4 row and reports the
  // calibration.  Throws std::logic_error if no single sign fits.
  DeviationRecord calibrate();
  bool calibrated() const { return sign_.has_value(); }
  int eta_sign() const;

  // (rank, degree) on Gamma of the curve-side image of E(r), computed as
  // -q_push(p_pull(ch E(r)) . dual(ch sheaf) . q_pull(ch omega) .
  // p_pull(td X)).  Throws UncalibratedSign before calibrate().
  std::pair<Rational, Rational> grr_image(const FanoData& X, long long n,
                                          long long k) const;

  // Audits ch(Phi(F)) = ch(E(r)) + e dual(ch companion) with e =
  // |chi(E(r), companion)| against the reverse pushforward of the
  // grr_image row; skipped where the companion character is unpublished.
  DeviationRecord resolution_character_check(const FanoData& X, long long n,
                                             long long k) const;

  // Character identities of the displayed fiber resolutions.
  std::vector<DeviationRecord> universal_fiber_checks(const FanoData& X) const;

 private:
  std::pair<Rational, Rational> grr_with_sign(const FanoData& X, long long n,
                                              long long k, int sign) const;
  ProductClass character_with_sign(const UniversalSheafData& D,
                                   const FanoData& X, int sign) const;

  std::map<std::string, UniversalSheafData> rows_;
  std::optional<int> sign_;
};

}  // namespace fic
