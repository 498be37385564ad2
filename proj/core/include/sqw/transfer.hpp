#pragma once

#include <algorithm>

#include "sqw/report.hpp"
#include "sqw/weights.hpp"

namespace sqw {

namespace detail {

// λ_r - λ_{r+1}
inline int gap(const Partition& p, int r) { return p.part(r) - p.part(r + 1); }

template <class K>
K param(const K& proto, const ParamSeq& s, size_t i) {
  return lift(proto, s.at(i));
}

template <class K>
K wb1(const K& a2, const K& b1, const K& b2, const K& q, int I, int J, int Kk, int L) {
  return weight_wb(a2, b1, b2, q, Composition{I}, Composition{J}, Composition{Kk}, Composition{L});
}

template <class K>
K wa1(const K& a1, const K& a2, const K& b1, const K& q, int I, int J, int Kk, int L) {
  return weight_wa(a1, a2, b1, q, Composition{I}, Composition{J}, Composition{Kk}, Composition{L});
}

// 1 / (q;q)_n
template <class K>
K inv_qq(const K& q, long n) {
  return checked_inverse(q_pochhammer(q, q, n), Errc::SingularDenominator, "(q;q)_n vanishes");
}

}  // namespace detail

// ⟨bra| T^{b,N}_{I,L}(x | A,B) |ket⟩: the single configuration with L_r = L_{r-1} + J_r - K_r.
template <class K>
K tb_element(const K& x, const ParamSeq& A, const ParamSeq& B, int I, int L, const Partition& bra,
             const Partition& ket, int N, const K& q) {
  if (bra.length() > N || ket.length() > N) throw Error(Errc::OutOfRange, "partition longer than N");
  K prod = one_like(q);
  int Lr = I;
  for (int r = 1; r <= N; ++r) {
    const int J = detail::gap(ket, r), Kr = detail::gap(bra, r);
    const int next = Lr + J - Kr;
    if (next < 0) return zero_like(q);
    K w = detail::wb1(detail::param(q, A, r + 1), x, detail::param(q, B, r), q, Lr, J, Kr, next);
    if (is_zero_scalar(w)) return zero_like(q);
    prod = prod * w;
    Lr = next;
  }
  return Lr == L ? prod : zero_like(q);
}

// ⟨bra| T^{a,N}_{K,J}(y | A,B) |ket⟩ with J_r = J_{r-1} + L_r - I_r and the factors (y/b_0)^{-I_r}.
template <class K>
K ta_element(const K& y, const ParamSeq& A, const ParamSeq& B, int Kin, int J, const Partition& bra,
             const Partition& ket, int N, const K& q) {
  if (bra.length() > N || ket.length() > N) throw Error(Errc::OutOfRange, "partition longer than N");
  const K yb = y * detail::denominator_inverse(detail::param(q, B, 0));
  K prod = one_like(q);
  int prev = Kin;
  for (int r = 1; r <= N; ++r) {
    const int Ir = detail::gap(ket, r), Lr = detail::gap(bra, r);
    const int Jr = prev + Lr - Ir;
    if (Jr < 0) return zero_like(q);
    K w = detail::wa1(detail::param(q, A, r), y, detail::param(q, B, r), q, Ir, Jr, prev, Lr);
    if (is_zero_scalar(w)) return zero_like(q);
    prod = prod * w * power(yb, -Ir);
    prev = Jr;
  }
  return prev == J ? prod : zero_like(q);
}

// ⟨λ| B(x | A,B) |μ⟩ = b_0^{-r} ∏_{i<r}(x - a_1 q^i)/(q;q)_r · ⟨λ| T^b_{r,0}(x) |μ⟩ with r = λ_1 - μ_1.
template <class K>
K b_element(const K& x, const ParamSeq& A, const ParamSeq& B, const Partition& lambda, const Partition& mu,
            const K& q) {
  if (!interlaces(lambda, mu)) return zero_like(q);
  const int r = lambda.part(1) - mu.part(1);
  K t = tb_element(x, A, B, r, 0, lambda, mu, mu.length() + 1, q);
  if (is_zero_scalar(t)) return t;
  const K b0inv = detail::denominator_inverse(detail::param(q, B, 0));
  return t * power(b0inv, r) * detail::shifted_product(x, detail::param(q, A, 1), q, r) * detail::inv_qq(q, r);
}

// ψ_λ(A,B) = ∏_{r≥0} (b_r/a_r)^{λ_{r+1}} ∏_{r≥1} (q;q)_{λ_r-λ_{r+1}}/(a_r/b_r;q)_{λ_r-λ_{r+1}}
template <class K>
K psi(const Partition& lambda, const ParamSeq& A, const ParamSeq& B, const K& q) {
  K r = one_like(q);
  for (int i = 0; i < lambda.length(); ++i) {
    const K ai = detail::param(q, A, i), bi = detail::param(q, B, i);
    r = r * power(K(bi * detail::denominator_inverse(ai)), lambda.part(i + 1));
  }
  for (int i = 1; i <= lambda.length(); ++i) {
    const int g = detail::gap(lambda, i);
    const K ratio = detail::param(q, A, i) * detail::denominator_inverse(detail::param(q, B, i));
    r = r * q_pochhammer(q, q, g) * detail::denominator_inverse(q_pochhammer(ratio, q, g));
  }
  return r;
}

// ⟨μ| B*(y | A,B) |λ⟩ as a function of u = 1/y, through the duality
// ψ_λ(A,B)/ψ_μ(A,τB) · ⟨λ| B(u | B̄,Ā) |μ⟩. Valid for graded u.
template <class K>
K b_star_element_inv(const K& u, const ParamSeq& A, const ParamSeq& B, const Partition& mu, const Partition& lambda,
                     const K& q) {
  if (!interlaces(lambda, mu)) return zero_like(q);
  K b = b_element(u, B.invert(), A.invert(), lambda, mu, q);
  if (is_zero_scalar(b)) return b;
  return b * psi(lambda, A, B, q) * detail::denominator_inverse(psi(mu, A, B.shift(), q));
}

template <class K>
K b_star_element(const K& y, const ParamSeq& A, const ParamSeq& B, const Partition& mu, const Partition& lambda,
                 const K& q) {
  return b_star_element_inv(detail::denominator_inverse(y), A, B, mu, lambda, q);
}

// ⟨μ| B*(y | A,B) |λ⟩ = ⟨μ| T^a_{λ_1-μ_1,0}(y) |λ⟩ evaluated from the W^a vertices.
template <class K>
K b_star_element_direct(const K& y, const ParamSeq& A, const ParamSeq& B, const Partition& mu,
                        const Partition& lambda, const K& q) {
  if (!interlaces(lambda, mu)) return zero_like(q);
  const int N = std::max(lambda.length(), 1);
  return ta_element(y, A, B, lambda.part(1) - mu.part(1), 0, mu, lambda, N, q);
}

// Summand of the q-Gauss sum at fixed I, multiplied through so that it is polynomial in x, 1/y, q:
// (x/y)^I (a/x;q)_I/(q;q)_I · R_{a,x,y,b}(I,J,K,L) via the second P-sum.
template <class K>
K qgauss_term(long I, long J, long L, const K& a, const K& b, const K& x, const K& u, const K& q) {
  const long Kc = I + J - L;
  if (I < 0 || Kc < 0) return zero_like(q);
  const K binv = detail::denominator_inverse(b);
  const K xb = x * binv, ab = a * binv;
  const K xl = power(binv, L) * detail::shifted_product(x, a, q, L);
  K acc = zero_like(q);
  for (long P = 0; P <= std::min(I, Kc); ++P) {
    K left = xl * q_pochhammer(xb, q, Kc - P) * detail::denominator_inverse(q_pochhammer(ab, q, L + Kc - P)) *
             q_binomial(L + Kc - P, L, q);
    K right = q_pochhammer(K(a * u), q, I - P) * detail::shifted_product(K(x * u), one_like(q), q, P) *
              q_binomial(I, P, q);
    acc = acc + left * right;
  }
  return acc * detail::inv_qq(q, I);
}

// (a u;q)_∞ (x/b;q)_∞ / ((a/b;q)_∞ (x u;q)_∞)
TruncSeries exchange_factor(const TruncSeries& a, const TruncSeries& b, const TruncSeries& x, const TruncSeries& u,
                            const TruncSeries& q, int D);

// Σ_{I-K=L-J} (x/y)^I (a/x;q)_I/(q;q)_I R_{a,x,y,b}(I,J,K,L) against the product side, at x = t·xhat,
// 1/y = t·yhat, q = t·qhat.
SeriesReport check_qgauss(int J, int L, const Rational& a, const Rational& b, int D, const Rational& xhat,
                          const Rational& yhat, const Rational& qhat);

// Σ_λ ⟨ν|B*(y)|λ⟩⟨λ|B(x)|μ⟩ against the exchanged side. Uses point.xhat[0], point.yhat[0] (as 1/y).
SeriesReport check_exchange(const Partition& mu, const Partition& nu, int D, const GradedPoint& point);

// λ with μ ≺ λ and λ_1 ≤ mu_1 + extra
std::vector<Partition> partitions_above(const Partition& mu, int extra);

}  // namespace sqw
