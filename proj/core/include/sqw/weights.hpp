#pragma once

#include <functional>
#include <vector>

#include "sqw/partition.hpp"
#include "sqw/qkit.hpp"

namespace sqw {

template <class K>
struct WeightContext {
  K q;
  K a1, a2, b1, b2;
};

namespace detail {

inline void require_rank(const Composition& a, const Composition& b) {
  if (a.rank() != b.rank()) throw Error(Errc::OutOfRange, "composition rank mismatch");
}

// Σ_{i<j} X_i Y_j
inline long cross_sum(const Composition& X, const Composition& Y) {
  long s = 0, prefix = 0;
  for (size_t j = 0; j < X.rank(); ++j) {
    s += prefix * Y[j];
    prefix += X[j];
  }
  return s;
}

template <class K>
K binomial_product(const Composition& top, const Composition& part, const K& q) {
  K r = one_like(q);
  for (size_t i = 0; i < top.rank(); ++i) r = r * q_binomial(top[i], part[i], q);
  return r;
}

// ∏_{i<n} (u - v q^i)
template <class K>
K shifted_product(const K& u, const K& v, const K& q, long n) {
  K r = one_like(q), vq = v;
  for (long i = 0; i < n; ++i) {
    r = r * (u - vq);
    vq = vq * q;
  }
  return r;
}

template <class K>
K denominator_inverse(const K& d) {
  return checked_inverse(d, Errc::SingularDenominator, "vanishing weight denominator");
}

bool vertex_labels_ok(const Composition& I, const Composition& J, const Composition& K, const Composition& L);

// Calls fn(P) for every composition 0 ≤ P ≤ upper.
void for_each_in_box(const Composition& upper, const std::function<void(const Composition&)>& fn);

}  // namespace detail

// Φ(X,Y;a,b) = b^{|X|} q^{Σ_{i<j} X_i Y_j} (a;q)_{|X|} (b;q)_{|Y|} / (ab;q)_{|X+Y|} ∏ (q;q)_{X_i+Y_i}/((q;q)_{X_i}(q;q)_{Y_i})
template <class K>
K phi(const Composition& X, const Composition& Y, const K& a, const K& b, const K& q) {
  detail::require_rank(X, Y);
  bool all_nonneg_sum = true, some_negative = false;
  for (size_t i = 0; i < X.rank(); ++i) {
    if (X[i] < 0 && Y[i] < 0) throw Error(Errc::SingularDenominator, "both Φ indices negative");
    if (X[i] + Y[i] < 0) all_nonneg_sum = false;
    if (X[i] < 0 || Y[i] < 0) some_negative = true;
  }
  if (all_nonneg_sum && some_negative) return zero_like(q);
  const long sx = X.total(), sy = Y.total();
  K r = power(b, sx) * power(q, detail::cross_sum(X, Y)) * q_pochhammer(a, q, sx) * q_pochhammer(b, q, sy);
  r = r * detail::denominator_inverse(q_pochhammer(K(a * b), q, sx + sy));
  for (size_t i = 0; i < X.rank(); ++i) r = r * q_multinomial_ratio(X[i] + Y[i], {X[i], Y[i]}, q);
  return r;
}

// W^a_{a1,a2,b1}(I,J,K,L) = δ_{I+J=K+L} Φ(I-K, K; a1/a2, a2/b1), written as a polynomial in a2.
template <class S>
S weight_wa(const S& a1, const S& a2, const S& b1, const S& q, const Composition& I, const Composition& J,
            const Composition& K, const Composition& L) {
  if (!detail::vertex_labels_ok(I, J, K, L) || !I.dominates(K)) return zero_like(q);
  const Composition X = I - K;
  const long sx = X.total(), sk = K.total(), si = I.total();
  const S b1inv = detail::denominator_inverse(b1);
  S r = power(q, detail::cross_sum(X, K)) * power(b1inv, sx) * detail::shifted_product(a2, a1, q, sx) *
        q_pochhammer(S(a2 * b1inv), q, sk);
  r = r * detail::denominator_inverse(q_pochhammer(S(a1 * b1inv), q, si));
  return r * detail::binomial_product(I, K, q);
}

// W^b_{a2,b1,b2}(I,J,K,L) = δ_{I+J=K+L} Φ(L, J-L; a2/b1, b1/b2), written as a polynomial in b1.
template <class S>
S weight_wb(const S& a2, const S& b1, const S& b2, const S& q, const Composition& I, const Composition& J,
            const Composition& K, const Composition& L) {
  if (!detail::vertex_labels_ok(I, J, K, L) || !J.dominates(L)) return zero_like(q);
  const Composition Y = J - L;
  const long sl = L.total(), sy = Y.total(), sj = J.total();
  const S b2inv = detail::denominator_inverse(b2);
  S r = power(q, detail::cross_sum(L, Y)) * power(b2inv, sl) * detail::shifted_product(b1, a2, q, sl) *
        q_pochhammer(S(b1 * b2inv), q, sy);
  r = r * detail::denominator_inverse(q_pochhammer(S(a2 * b2inv), q, sj));
  return r * detail::binomial_product(J, L, q);
}

enum class RForm { PSum1, PSum2 };

// R_{a1,b1,a2,b2}(I,J,K,L) by either P-sum.
template <class S>
S weight_r(const S& a1, const S& b1, const S& a2, const S& b2, const S& q, const Composition& I,
           const Composition& J, const Composition& K, const Composition& L, RForm form) {
  if (!detail::vertex_labels_ok(I, J, K, L)) return zero_like(q);
  S acc = zero_like(q);
  const S a2inv = detail::denominator_inverse(a2), b1inv = detail::denominator_inverse(b1),
          b2inv = detail::denominator_inverse(b2);
  Composition upper = Composition::zeros(I.rank());
  if (form == RForm::PSum1) {
    for (size_t i = 0; i < I.rank(); ++i) upper[i] = std::min(J[i], L[i]);
    detail::for_each_in_box(upper, [&](const Composition& P) {
      acc = acc + phi(L - P, K, S(a1 * a2inv), S(a2 * b2inv), q) * phi(P, J - P, S(a2 * b1inv), S(b1 * b2inv), q);
    });
  } else {
    for (size_t i = 0; i < I.rank(); ++i) upper[i] = std::min(I[i], K[i]);
    detail::for_each_in_box(upper, [&](const Composition& P) {
      acc = acc + phi(L, K - P, S(a1 * b1inv), S(b1 * b2inv), q) * phi(I - P, P, S(a1 * a2inv), S(a2 * b1inv), q);
    });
  }
  return acc;
}

// a2^{-I} R_{a1,b1,a2,b2}(I,J,K,L) for rank-1 labels as a function of a2inv = 1/a2.
// Never inverts a2inv, so it stays valid when a2inv has positive valuation.
template <class S>
S weight_r_scaled(const S& a1, const S& b1, const S& a2inv, const S& b2, const S& q, long I, long J, long K, long L) {
  if (I < 0 || J < 0 || K < 0 || L < 0 || I + J != K + L) return zero_like(q);
  const S b2inv = detail::denominator_inverse(b2);
  const S qb = b2inv;  // q^0 / b2
  // 1 / ∏_{i<J} (a2inv - q^i/b2)
  const S common = detail::denominator_inverse(detail::shifted_product(a2inv, qb, q, J));
  S acc = zero_like(q);
  for (long P = 0; P <= std::min(J, L); ++P) {
    S t1 = power(b2inv, L - P) * detail::shifted_product(one_like(q), S(a1 * a2inv), q, L - P) *
           detail::shifted_product(a2inv, qb, q, K) *
           detail::denominator_inverse(q_pochhammer(S(a1 * b2inv), q, L - P + K)) * q_binomial(L - P + K, L - P, q);
    S t2 = power(b2inv, P) * detail::shifted_product(S(b1 * a2inv), one_like(q), q, P) *
           q_pochhammer(S(b1 * b2inv), q, J - P) * q_binomial(J, P, q);
    acc = acc + t1 * t2;
  }
  return acc * common;
}

template <class K>
K weight_wa(const WeightContext<K>& c, const Composition& I, const Composition& J, const Composition& Kc,
            const Composition& L) {
  return weight_wa(c.a1, c.a2, c.b1, c.q, I, J, Kc, L);
}

template <class K>
K weight_wb(const WeightContext<K>& c, const Composition& I, const Composition& J, const Composition& Kc,
            const Composition& L) {
  return weight_wb(c.a2, c.b1, c.b2, c.q, I, J, Kc, L);
}

template <class K>
K weight_r(const WeightContext<K>& c, const Composition& I, const Composition& J, const Composition& Kc,
           const Composition& L, RForm form) {
  return weight_r(c.a1, c.b1, c.a2, c.b2, c.q, I, J, Kc, L, form);
}

struct YbeParams {
  Rational a1, a2, a3, b1, b2, b3, q;
};

struct YbeBoundary {
  Composition A1, A2, A3, B1, B2, B3;
};

struct YbeResult {
  bool pass = false;
  Rational lhs, rhs;
};

// Three W^b vertices on each side.
YbeResult check_ybe_bbb(const YbeParams& p, const YbeBoundary& bd);
// W^b, R, W^a against W^a, R, W^b.
YbeResult check_ybe_mixed(const YbeParams& p, const YbeBoundary& bd);

}  // namespace sqw
