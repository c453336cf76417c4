#pragma once

#include <cstdint>
#include <string>

namespace fic {

// Prime field F_P for P < 2^62; products go through unsigned __int128.
template <std::uint64_t P>
class Fp {
 public:
  constexpr Fp() = default;
  constexpr explicit Fp(std::uint64_t v) : v_(v % P) {}

  static Fp from_signed(long long v) {
    long long r = v % static_cast<long long>(P);
    if (r < 0) r += static_cast<long long>(P);
    return Fp(static_cast<std::uint64_t>(r));
  }

  constexpr std::uint64_t value() const { return v_; }
  static constexpr std::uint64_t modulus() { return P; }

  friend constexpr Fp operator+(Fp x, Fp y) {
    std::uint64_t s = x.v_ + y.v_;
    if (s >= P) s -= P;
    return Fp::raw(s);
  }
  friend constexpr Fp operator-(Fp x, Fp y) {
    std::uint64_t s = x.v_ >= y.v_ ? x.v_ - y.v_ : x.v_ + P - y.v_;
    return Fp::raw(s);
  }
  friend constexpr Fp operator-(Fp x) { return Fp::raw(x.v_ ? P - x.v_ : 0); }
  friend constexpr Fp operator*(Fp x, Fp y) {
    unsigned __int128 prod = static_cast<unsigned __int128>(x.v_) * y.v_;
    return Fp::raw(static_cast<std::uint64_t>(prod % P));
  }
  friend constexpr Fp operator/(Fp x, Fp y) { return x * y.inverse(); }

  constexpr Fp pow(std::uint64_t e) const {
    Fp base = *this, acc = Fp::raw(1);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
  constexpr Fp inverse() const { return pow(P - 2); }

  friend constexpr bool operator==(Fp x, Fp y) { return x.v_ == y.v_; }
  friend constexpr bool operator!=(Fp x, Fp y) { return x.v_ != y.v_; }

 private:
  static constexpr Fp raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint64_t v_ = 0;
};

// Mersenne primes: the working field and the smaller user-facing one.
using Fp61 = Fp<(std::uint64_t{1} << 61) - 1>;
using Fp31 = Fp<2147483647ull>;

template <std::uint64_t P>
std::string to_string(Fp<P> x) {
  return std::to_string(x.value());
}

}  // namespace fic
