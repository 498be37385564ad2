#pragma once

#include <type_traits>

#include "sqw/error.hpp"
#include "sqw/rational.hpp"
#include "sqw/series.hpp"

namespace sqw {

// Generic helpers over the two scalar rings, Rational and TruncSeries.

template <class K>
K one_like(const K& proto) { return lift(proto, Rational(1)); }

template <class K>
K zero_like(const K& proto) { return lift(proto, Rational(0)); }

template <class K>
bool is_zero_scalar(const K& x) {
  if constexpr (std::is_same_v<K, Rational>) return x.is_zero();
  else return x.is_zero();
}

// 1/x, throwing the given code when x is not a unit.
template <class K>
K checked_inverse(const K& x, Errc code, const char* what) {
  if (!is_invertible(x)) throw Error(code, what);
  if constexpr (std::is_same_v<K, Rational>) return x.inverse();
  else return series_inv(x);
}

template <class K>
K power(const K& x, long e) {
  if (e < 0) return power(checked_inverse(x, Errc::DivisionByZero, "negative power of a non-unit"), -e);
  K r = one_like(x), b = x;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

}  // namespace sqw
