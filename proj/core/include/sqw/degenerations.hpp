#pragma once

#include "sqw/sqwhittaker.hpp"

namespace sqw {

// F̃_{λ/μ}(x | A,∞) = ∏_r ∏_{i<λ_r-μ_r}(x - a_r q^i) (q;q)_{μ_r-μ_{r+1}} / ((q;q)_{λ_r-μ_r}(q;q)_{μ_r-λ_{r+1}})
template <class X, class K>
X f_tilde_one_var(const Partition& lambda, const Partition& mu, const X& x, const ParamSeq& A, const K& q) {
  if (!interlaces(lambda, mu)) return lift(x, Rational(0));
  X num = lift(x, Rational(1));
  K coef = one_like(q);
  for (int r = 1; r <= lambda.length(); ++r) {
    const int k1 = lambda.part(r) - mu.part(r), k2 = mu.part(r) - lambda.part(r + 1),
              k3 = mu.part(r) - mu.part(r + 1);
    if (k1 > 0) {
      K aq = detail::param(q, A, static_cast<size_t>(r));
      for (int i = 0; i < k1; ++i) {
        num = num * (x - aq);
        aq = aq * q;
      }
    }
    coef = coef * q_pochhammer(q, q, k3) * detail::inv_qq(q, k1) * detail::inv_qq(q, k2);
  }
  return num * coef;
}

template <class X, class K>
X f_tilde(const Partition& lambda, const Partition& nu, const std::vector<X>& xs, const ParamSeq& A, const K& q) {
  ChainSum<X> chain(static_cast<int>(xs.size()), nu, detail::unit_like(xs, q),
                    [&](const Partition& l, const Partition& m, int k) {
                      return f_tilde_one_var(l, m, xs[static_cast<size_t>(k)], A.shift(static_cast<size_t>(k)), q);
                    });
  return chain.value(lambda);
}

SymPoly f_tilde_symbolic(const Partition& lambda, const Partition& nu, int n, const ParamSeq& A, const Rational& q);

// (-1)^{λ_1} q^{(λ_1²-λ_1)/2} ∏ a_i^{λ_i} ∏_{i,j} (q^{λ_{i+1}-λ_i} a_{j+i}/a_i;q)_{λ_{j+i}-λ_{j+i+1}}
Rational h_tilde(const Partition& lambda, const ParamSeq& A, const Rational& q, int n);

// F^el_{λ/μ}(r | C,∞) = ∏_i (μ_i-μ_{i+1})! ∏_{j<λ_i-μ_i}(r - c_i - jd) / ((λ_i-μ_i)!(μ_i-λ_{i+1})!)
template <class X>
X f_el_one_var(const Partition& lambda, const Partition& mu, const X& r, const ParamSeq& C, const Rational& d) {
  if (!interlaces(lambda, mu)) return lift(r, Rational(0));
  X num = lift(r, Rational(1));
  Rational coef = 1;
  auto factorial = [](int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= Rational(i);
    return f;
  };
  for (int i = 1; i <= lambda.length(); ++i) {
    const int k1 = lambda.part(i) - mu.part(i), k2 = mu.part(i) - lambda.part(i + 1),
              k3 = mu.part(i) - mu.part(i + 1);
    if (k1 > 0) {
      const Rational ci = C.at(static_cast<size_t>(i));
      for (int j = 0; j < k1; ++j) num = num * (r - lift(r, ci + d * Rational(j)));
    }
    coef = coef * factorial(k3) / (factorial(k1) * factorial(k2));
  }
  return num * coef;
}

template <class X>
X f_el(const Partition& lambda, const Partition& nu, const std::vector<X>& rs, const ParamSeq& C, const Rational& d) {
  ChainSum<X> chain(static_cast<int>(rs.size()), nu, detail::unit_like(rs, d),
                    [&](const Partition& l, const Partition& m, int k) {
                      return f_el_one_var(l, m, rs[static_cast<size_t>(k)], C.shift(static_cast<size_t>(k)), d);
                    });
  return chain.value(lambda);
}

SymPoly f_el_symbolic(const Partition& lambda, const Partition& nu, int n, const ParamSeq& C, const Rational& d);

// (-1)^{|λ|} (-d)^{λ_1} ∏_{i,j} ∏_{k=1}^{λ_{i+j}-λ_{i+j+1}} (c_{j+i} - c_i + d(λ_{i+1} - λ_i + k - 1))
Rational h_el(const Partition& lambda, const ParamSeq& C, const Rational& d, int n);

// Q_λ(x_1..x_n;q,0) = b_λ(q) P_λ(x;q,0) chained from the one-variable weight
// x^{|λ|-|μ|} ∏_r (q;q)_{μ_r-μ_{r+1}} / ((q;q)_{λ_r-μ_r}(q;q)_{μ_r-λ_{r+1}}).
SymPoly q_whittaker_q(const Partition& lambda, int n, const Rational& q);
// P_λ(x_1..x_n;q,0) chained from x^{|λ|-|μ|} ∏_r [λ_r-λ_{r+1} choose λ_r-μ_r]_q.
SymPoly q_whittaker_p(const Partition& lambda, int n, const Rational& q);
// b_λ(q) = ∏_r 1/(q;q)_{λ_r-λ_{r+1}}, so that Q_λ = b_λ P_λ
Rational q_whittaker_b(const Partition& lambda, const Rational& q);

// (e^{εu} - e^{εv})/ε modulo ε^{order+1}
TruncSeries exp_difference(const Rational& u, const Rational& v, int order);

// ε^{|μ|-μ_1-|λ|+λ_1} F̃_{λ/μ}(x_1..x_n | A,∞) at x_i = e^{ε r_i}, a_i = e^{ε c_i}, q = e^{ε d}, as a series in ε.
// Its constant term times (-d)^{λ_1-μ_1} is F^el_{λ/μ}(r | C,∞).
TruncSeries f_tilde_eps_scaled(const Partition& lambda, const Partition& mu, const std::vector<Rational>& rs,
                               const ParamSeq& C, const Rational& d, int order);

}  // namespace sqw
