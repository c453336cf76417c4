#include "fic/k3.hpp"

#include "fic/instanton.hpp"

namespace fic {

K3Data k3_data(const FanoData& X) {
  // S in |iH| gives H_S^2 = i * H^3 on S.
  return K3Data{Rational(X.index) * X.degree};
}

K3Class restrict_to_k3(const ChowClass& A, const FanoData& X) {
  // b l restricts to b (i H^3) points = i*b in the point coordinate.
  return K3Class{A.r, A.a, Rational(X.index) * A.b};
}

Rational euler_pair_k3(const K3Class& u, const K3Class& v, const K3Data& S) {
  return 2 * u.r * v.r + u.r * v.s + u.s * v.r - u.aS * v.aS * S.h2;
}

LagrangianCheck lagrangian_check(const FanoData& X, long long n, long long k) {
  const ChowClass g = gamma(X, n, k);
  const K3Class gs = restrict_to_k3(g, X);
  Rational lhs = 2 * (1 - euler_pair(g, g, X));
  Rational rhs = 2 - euler_pair_k3(gs, gs, k3_data(X));
  DeviationRecord rec = audit(
      "lagrangian-identity", "2(1-chi_X(gamma,gamma)) = 2-chi_S(r(gamma),r(gamma))",
      to_string(lhs), to_string(rhs),
      "restriction to the anticanonical K3 at (n,k)=(" + std::to_string(n) +
          "," + std::to_string(k) + ") on " + X.name,
      "constraint");
  return LagrangianCheck{rec.verdict == Verdict::match, rec};
}

}  // namespace fic
