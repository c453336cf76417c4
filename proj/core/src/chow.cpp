#include "fic/chow.hpp"

#include <stdexcept>

namespace fic {

namespace {

Rational half_index(const FanoData& X) { return Rational(X.index) / 2; }

}  // namespace

Rational FanoData::td2() const {
  // chi(O) = 1 forces td2 = (i^2 d + c2(T).l-part) / 12 with c2(T) = (24/i) l.
  return (Rational(index) * index * degree + Rational(24) / index) / 12;
}

ChowClass FanoData::todd() const {
  return ChowClass{1, half_index(*this), td2(), 1};
}

ChowClass FanoData::c2_tangent() const {
  return ChowClass{0, 0, Rational(24) / index, 0};
}

FanoData make_fano(std::string name, int index, long long degree,
                   std::optional<int> genus) {
  if (index < 1 || index > 4) {
    throw std::invalid_argument("index must be 1..4, got " +
                                std::to_string(index));
  }
  if (index == 4 && degree != 1) {
    throw std::invalid_argument("index 4 forces degree 1");
  }
  if (index == 3 && degree != 2) {
    throw std::invalid_argument("index 3 forces degree 2");
  }
  if (index == 2 && (degree < 1 || degree > 5)) {
    throw std::invalid_argument("index 2 needs degree 1..5");
  }
  if (index == 1) {
    if (!genus) throw std::invalid_argument("index 1 needs a genus");
    if (*genus < 3 || *genus > 12) {
      throw std::invalid_argument("genus must be 3..12, got " +
                                  std::to_string(*genus));
    }
    if (degree != 2LL * *genus - 2) {
      throw std::invalid_argument("index 1 needs degree = 2g - 2");
    }
  } else if (genus) {
    throw std::invalid_argument("genus only makes sense at index 1");
  }
  return FanoData{std::move(name), index, degree, genus};
}

ChowClass unit_class() { return ChowClass{1, 0, 0, 0}; }

ChowClass operator+(const ChowClass& A, const ChowClass& B) {
  return ChowClass{A.r + B.r, A.a + B.a, A.b + B.b, A.c + B.c};
}

ChowClass operator-(const ChowClass& A, const ChowClass& B) {
  return ChowClass{A.r - B.r, A.a - B.a, A.b - B.b, A.c - B.c};
}

ChowClass operator-(const ChowClass& A) {
  return ChowClass{-A.r, -A.a, -A.b, -A.c};
}

ChowClass operator*(const Rational& t, const ChowClass& A) {
  return ChowClass{t * A.r, t * A.a, t * A.b, t * A.c};
}

ChowClass mul(const ChowClass& A, const ChowClass& B, const FanoData& X) {
  const Rational d = X.degree;
  return ChowClass{
      A.r * B.r,
      A.r * B.a + A.a * B.r,
      A.r * B.b + A.b * B.r + d * A.a * B.a,
      A.r * B.c + A.c * B.r + A.a * B.b + A.b * B.a,
  };
}

ChowClass twist(const ChowClass& A, long long m, const FanoData& X) {
  const Rational d = X.degree;
  const Rational t = m;
  return ChowClass{
      A.r,
      A.a + t * A.r,
      A.b + t * A.a * d + t * t * d * A.r / 2,
      A.c + t * A.b + t * t * d * A.a / 2 + t * t * t * d * A.r / 6,
  };
}

ChowClass dual_ch(const ChowClass& A) {
  return ChowClass{A.r, -A.a, A.b, -A.c};
}

Rational euler_char(const ChowClass& A, const FanoData& X) {
  return A.c + half_index(X) * A.b + X.td2() * A.a + A.r;
}

Rational euler_pair(const ChowClass& A, const ChowClass& B,
                    const FanoData& X) {
  return euler_char(mul(dual_ch(A), B, X), X);
}

std::array<Rational, 4> hilbert_polynomial(const ChowClass& A,
                                           const FanoData& X) {
  const Rational d = X.degree;
  const Rational i2 = half_index(X);
  return {
      euler_char(A, X),
      A.b + i2 * A.a * d + X.td2() * A.r,
      d * A.a / 2 + i2 * d * A.r / 2,
      d * A.r / 6,
  };
}

int reduced_hilbert_compare(const ChowClass& A, const ChowClass& B,
                            const FanoData& X) {
  if (A.r == 0 || B.r == 0) {
    throw std::domain_error("reduced Hilbert polynomial needs nonzero rank");
  }
  auto pa = hilbert_polynomial(A, X);
  auto pb = hilbert_polynomial(B, X);
  for (int deg = 3; deg >= 0; --deg) {
    Rational lhs = pa[deg] / A.r;
    Rational rhs = pb[deg] / B.r;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
  }
  return 0;
}

Rational slope(const ChowClass& A) {
  if (A.r == 0) throw std::domain_error("slope needs nonzero rank");
  return A.a / A.r;
}

ChowClass line_class(long long j, const FanoData& X) {
  // chi(O_l(j)) = j + 1, so the p-coefficient is j + 1 - i/2.
  return ChowClass{0, 0, 1, Rational(j) + 1 - half_index(X)};
}

ChowClass ch_from_chern(const ChernClasses& c, const FanoData& X) {
  const Rational d = X.degree;
  return ChowClass{
      c.rank,
      c.c1,
      (c.c1 * c.c1 * d - 2 * c.c2) / 2,
      (c.c1 * c.c1 * c.c1 * d - 3 * c.c1 * c.c2 + 3 * c.c3) / 6,
  };
}

ChernClasses chern_from_ch(const ChowClass& A, const FanoData& X) {
  const Rational d = X.degree;
  Rational c2 = (A.a * A.a * d - 2 * A.b) / 2;
  Rational c3 = 2 * A.c - A.a * A.a * A.a * d / 3 + A.a * c2;
  return ChernClasses{A.r, A.a, c2, c3};
}

bool chern_integral(const ChowClass& A, const FanoData& X) {
  ChernClasses c = chern_from_ch(A, X);
  return is_integer(c.rank) && is_integer(c.c1) && is_integer(c.c2) &&
         is_integer(c.c3);
}

std::string to_string(const ChowClass& A) {
  return "(" + to_string(A.r) + ", " + to_string(A.a) + ", " + to_string(A.b) +
         ", " + to_string(A.c) + ")";
}

}  // namespace fic
