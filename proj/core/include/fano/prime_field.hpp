#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include "fano/error.hpp"

namespace fano {

constexpr bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Residue class modulo the prime P, stored in [0, P).
template <std::uint32_t P>
class Fp {
  static_assert(is_prime(P), "Fp modulus must be prime");
  static_assert(P < (1u << 31), "Fp modulus must fit in 31 bits");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Fp() = default;
  template <std::integral I>
  constexpr Fp(I v) : v_(reduce(static_cast<std::int64_t>(v))) {}  // NOLINT(google-explicit-constructor)

  constexpr std::uint32_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_one() const { return v_ == 1; }

  constexpr Fp inverse() const {
    if (v_ == 0) throw InvalidArgument("inverse of zero in F_" + std::to_string(P));
    return pow(P - 2);
  }

  constexpr Fp pow(std::uint64_t e) const {
    Fp base = *this, acc(1);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::string str() const { return std::to_string(v_); }

  constexpr Fp& operator+=(Fp o) {
    v_ += o.v_;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  constexpr Fp& operator-=(Fp o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_;
    return *this;
  }
  constexpr Fp& operator*=(Fp o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % P);
    return *this;
  }
  constexpr Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend constexpr Fp operator+(Fp a, Fp b) { return a += b; }
  friend constexpr Fp operator-(Fp a, Fp b) { return a -= b; }
  friend constexpr Fp operator*(Fp a, Fp b) { return a *= b; }
  friend constexpr Fp operator/(Fp a, Fp b) { return a /= b; }
  friend constexpr Fp operator-(Fp a) { return Fp() - a; }
  friend constexpr bool operator==(Fp a, Fp b) = default;
  friend constexpr auto operator<=>(Fp a, Fp b) = default;

  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

 private:
  static constexpr std::uint32_t reduce(std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(P);
    if (r < 0) r += P;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t v_ = 0;
};

}  // namespace fano
