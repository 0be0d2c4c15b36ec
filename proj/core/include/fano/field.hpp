#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "fano/error.hpp"
#include "fano/prime_field.hpp"
#include "fano/rational.hpp"

namespace fano {

template <class K>
concept Field = std::regular<K> && requires(K a, K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<K>;
  { a.str() } -> std::convertible_to<std::string>;
  K(0);
  K(1);
};

template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr std::uint32_t characteristic = 0;
  static std::string name() { return "Q"; }
};

template <std::uint32_t P>
struct field_traits<Fp<P>> {
  static constexpr std::uint32_t characteristic = P;
  static std::string name() { return "F_" + std::to_string(P); }
};

template <class K>
inline constexpr std::uint32_t characteristic_v = field_traits<K>::characteristic;

/// True when the field supports apolarity and the 1/3, 1/6 normalisations of
/// cubic coordinates: characteristic 0 or at least 5.
template <class K>
inline constexpr bool apolarity_safe_v = characteristic_v<K> == 0 || characteristic_v<K> >= 5;

template <Field K>
void require_apolarity_safe(const char* what) {
  if constexpr (!apolarity_safe_v<K>) {
    throw InvalidArgument(std::string(what) + " needs characteristic 0 or >= 5, got " +
                          field_traits<K>::name());
  }
}

/// Image of a rational in K. Throws if the denominator vanishes in K.
template <Field K>
K from_rational(const Rational& q) {
  if constexpr (std::same_as<K, Rational>) {
    return q;
  } else {
    constexpr std::uint32_t p = characteristic_v<K>;
    mpz_class num = q.numerator() % p;
    mpz_class den = q.denominator() % p;
    if (num < 0) num += p;
    if (den == 0)
      throw InvalidArgument("denominator of " + q.str() + " is divisible by " + std::to_string(p));
    return K(static_cast<std::int64_t>(num.get_si())) / K(static_cast<std::int64_t>(den.get_si()));
  }
}

/// Primes accepted by runtime dispatch (CLI --prime, census).
inline constexpr std::uint32_t kSupportedPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 32003};

namespace detail {
template <std::uint32_t P, std::uint32_t... Rest, class F>
decltype(auto) dispatch_impl(std::uint32_t p, F&& f) {
  if (p == P) return std::forward<F>(f).template operator()<Fp<P>>();
  if constexpr (sizeof...(Rest) > 0) {
    return dispatch_impl<Rest...>(p, std::forward<F>(f));
  } else {
    throw InvalidArgument("unsupported prime " + std::to_string(p) +
                          " (supported: 2..31, 101, 32003)");
  }
}
}  // namespace detail

/// Calls `f.template operator()<Fp<p>>()` for a runtime prime p.
template <class F>
decltype(auto) dispatch_prime(std::uint32_t p, F&& f) {
  return detail::dispatch_impl<2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 32003>(p, std::forward<F>(f));
}

}  // namespace fano
