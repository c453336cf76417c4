#pragma once

#include "fic/chow.hpp"
#include "fic/deviation.hpp"

namespace fic {

// Mukai-flavored class on the anticanonical K3 section S in |iH|:
// rank, multiple of H_S, and the point coefficient s.
struct K3Class {
  Rational r;
  Rational aS;
  Rational s;

  bool operator==(const K3Class&) const = default;
};

struct K3Data {
  Rational h2;  // H_S^2 = i * H^3
};

K3Data k3_data(const FanoData& X);

// (r, a, b) on X restricts to (r, a, i*b) on S.
K3Class restrict_to_k3(const ChowClass& A, const FanoData& X);

// chi_S(u, v) = 2 r_u r_v + r_u s_v + s_u r_v - a_u a_v H_S^2.
Rational euler_pair_k3(const K3Class& u, const K3Class& v, const K3Data& S);

struct LagrangianCheck {
  bool ok = false;
  DeviationRecord record;
};

// 2 (1 - chi_X(gamma,gamma)) = 2 - chi_S(restrict gamma, restrict gamma):
// instanton moduli sit half-dimensionally in the K3 moduli.
LagrangianCheck lagrangian_check(const FanoData& X, long long n, long long k);

}  // namespace fic
