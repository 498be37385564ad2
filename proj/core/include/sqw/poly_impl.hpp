#pragma once

#include <algorithm>
#include <type_traits>

namespace sqw {

namespace detail {

// The constant v in the scalar type of point; a point with no coordinates only works for Rational.
template <class K>
K constant_like(const std::vector<K>& point, const Rational& v) {
  if (!point.empty()) return lift(point[0], v);
  if constexpr (std::is_constructible_v<K, Rational>) return K(v);
  throw Error(Errc::OutOfRange, "cannot infer scalar ring from an empty point");
}

}  // namespace detail

template <class K>
K Poly::evaluate(const std::vector<K>& point) const {
  if (static_cast<int>(point.size()) != n_) throw Error(Errc::OutOfRange, "evaluation point has wrong size");
  if (n_ == 0) return detail::constant_like(point, t_.empty() ? Rational(0) : t_.begin()->second);
  const K zero = lift(point[0], Rational(0));
  std::vector<std::vector<K>> pw(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    int d = degree_in(i);
    pw[i].push_back(lift(point[0], Rational(1)));
    for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * point[i]);
  }
  K acc = zero;
  for (const auto& [e, c] : t_) {
    K m = lift(point[0], c);
    for (int i = 0; i < n_; ++i)
      if (e[i]) m = m * pw[i][e[i]];
    acc = acc + m;
  }
  return acc;
}

template <class K>
K monomial_symmetric_eval(const Partition& mu, const std::vector<K>& point) {
  const int n = static_cast<int>(point.size());
  if (mu.length() > n) return detail::constant_like(point, Rational(0));
  if (n == 0) return detail::constant_like(point, Rational(1));
  std::vector<int> e(static_cast<size_t>(n), 0);
  for (int r = 1; r <= mu.length(); ++r) e[r - 1] = mu.part(r);
  std::sort(e.begin(), e.end());
  K acc = lift(point[0], Rational(0));
  do {
    K m = lift(point[0], Rational(1));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) m = m * point[i];
    acc = acc + m;
  } while (std::next_permutation(e.begin(), e.end()));
  return acc;
}

template <class K>
K SymPoly::evaluate(const std::vector<K>& point) const {
  if (static_cast<int>(point.size()) != n_) throw Error(Errc::OutOfRange, "evaluation point has wrong size");
  if (n_ == 0) return detail::constant_like(point, coefficient(Partition()));
  K acc = lift(point[0], Rational(0));
  for (const auto& [mu, c] : t_) acc = acc + monomial_symmetric_eval(mu, point) * c;
  return acc;
}

}  // namespace sqw
