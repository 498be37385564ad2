#pragma once

#include <vector>

#include "sqw/scalar.hpp"

namespace sqw {

// (x;q)_n = ∏_{i=1}^n (1 - x q^{i-1}); for n < 0, ∏_{i=1}^{-n} (1 - x q^{-i})^{-1}.
template <class K>
K q_pochhammer(const K& x, const K& q, long n) {
  K r = one_like(q);
  if (n >= 0) {
    K xq = x;
    for (long i = 0; i < n; ++i) {
      r = r * (one_like(q) - xq);
      if (i + 1 < n) xq = xq * q;
    }
    return r;
  }
  K qinv = checked_inverse(q, Errc::DivisionByZero, "q is not invertible");
  K xq = x * qinv;
  for (long i = 1; i <= -n; ++i) {
    r = r * checked_inverse(K(one_like(q) - xq), Errc::DivisionByZero, "singular negative-index q-Pochhammer factor");
    xq = xq * qinv;
  }
  return r;
}

// ∏_{k≥0} (1 - x q^k) modulo t^{D+1}. Requires valuation(q) ≥ 1.
TruncSeries q_pochhammer_inf(const TruncSeries& x, const TruncSeries& q, int D);

// Gaussian binomial [n choose k]_q for 0 ≤ k ≤ n, via the q-Pascal recurrence (exact at any q).
template <class K>
K q_binomial(long n, long k, const K& q) {
  if (k < 0 || k > n) return zero_like(q);
  std::vector<K> row(static_cast<size_t>(k) + 1, zero_like(q));
  row[0] = one_like(q);
  std::vector<K> qpow{one_like(q)};
  for (long j = 1; j <= k; ++j) qpow.push_back(qpow.back() * q);
  for (long m = 1; m <= n; ++m)
    for (long j = std::min(m, k); j >= 1; --j) row[j] = row[j - 1] + qpow[j] * row[j];
  return row[k];
}

// (q;q)_top / ∏ (q;q)_{b_i} with Σ b_i = top, using the negative-index convention.
// Zero when exactly one bottom is negative and top ≥ 0. Throws Errc::BadSignature for two negative bottoms.
template <class K>
K q_multinomial_ratio(long top, const std::vector<long>& bottoms, const K& q) {
  long sum = 0, negatives = 0, neg = 0;
  for (long b : bottoms) {
    sum += b;
    if (b < 0) {
      ++negatives;
      neg = b;
    }
  }
  if (sum != top) throw Error(Errc::BadSignature, "bottoms do not sum to top");
  if (negatives >= 2) throw Error(Errc::BadSignature, "two negative bottoms");
  K r = one_like(q);
  if (negatives == 1) {
    if (top >= 0) return zero_like(q);
    const long rest = top - neg;
    // (q;q)_top / ((q;q)_neg (q;q)_rest) = (q^{neg+1};q)_rest / (q;q)_rest
    r = q_pochhammer(power(q, neg + 1), q, rest) *
        checked_inverse(q_pochhammer(q, q, rest), Errc::DivisionByZero, "(q;q)_n vanishes");
    top = rest;
  }
  long remaining = top;
  for (long b : bottoms) {
    if (b < 0) continue;
    r = r * q_binomial(remaining, b, q);
    remaining -= b;
  }
  return r;
}

}  // namespace sqw
