#pragma once

#include <functional>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

#include "sqw/linalg.hpp"
#include "sqw/poly.hpp"
#include "sqw/transfer.hpp"

namespace sqw {

namespace detail {

template <class X, class K>
X unit_like(const std::vector<X>& xs, const K& q) {
  if (!xs.empty()) return lift(xs[0], Rational(1));
  if constexpr (std::is_same_v<X, K>) return one_like(q);
  else if constexpr (std::is_same_v<X, Poly>) return Poly(0, Rational(1));
  else return X(Rational(1));
}

}  // namespace detail

// F_{λ/μ}(x | A,B) by the one-variable product formula, with the parameters supplied as a(r) = a_r and
// binv(r) = 1/b_r. X is the ring of x (Rational, TruncSeries, Poly), K the ring of the constants.
template <class X, class K, class AFn, class BinvFn>
X f_one_var_with(const Partition& lambda, const Partition& mu, const X& x, AFn a, BinvFn binv, const K& q) {
  const X one = lift(x, Rational(1));
  if (!interlaces(lambda, mu)) return lift(x, Rational(0));
  X num = one;
  K coef = one_like(q);
  for (int r = 1; r <= lambda.length(); ++r) {
    const int k1 = lambda.part(r) - mu.part(r), k2 = mu.part(r) - lambda.part(r + 1),
              k3 = mu.part(r) - mu.part(r + 1);
    if (k1 > 0) {
      coef = coef * power(K(binv(r - 1)), k1);
      K aq = a(r);
      for (int i = 0; i < k1; ++i) {
        num = num * (x - aq);
        aq = aq * q;
      }
    }
    if (k2 > 0) {
      K qb = binv(r);
      for (int i = 0; i < k2; ++i) {
        num = num * (one - x * qb);
        qb = qb * q;
      }
    }
    coef = coef * detail::inv_qq(q, k1) * detail::inv_qq(q, k2);
    if (k3 > 0) {
      const K ratio = a(r + 1) * binv(r);
      coef = coef * q_pochhammer(q, q, k3) * detail::denominator_inverse(q_pochhammer(ratio, q, k3));
    }
  }
  return num * coef;
}

template <class X, class K>
X f_one_var(const Partition& lambda, const Partition& mu, const X& x, const ParamSeq& A, const ParamSeq& B,
            const K& q) {
  return f_one_var_with(
      lambda, mu, x, [&](int i) { return detail::param(q, A, static_cast<size_t>(i)); },
      [&](int i) { return detail::denominator_inverse(detail::param(q, B, static_cast<size_t>(i))); }, q);
}

// Σ over chains ν ≺ ... ≺ μ ≺ λ of step(λ, μ, 0) step(μ, ·, 1) ... for nvars steps, memoized on
// (partition, steps taken). step(λ, μ, k) is the one-variable weight of the k-th variable (0-based).
template <class X>
class ChainSum {
 public:
  using Step = std::function<X(const Partition&, const Partition&, int)>;
  ChainSum(int nvars, Partition nu, X unit, Step step)
      : n_(nvars), nu_(std::move(nu)), unit_(std::move(unit)), step_(std::move(step)) {}

  X value(const Partition& lambda) { return rec(lambda, 0); }
  int nvars() const { return n_; }

 private:
  X rec(const Partition& lambda, int k) {
    const int rem = n_ - k;
    if (!lambda.contains(nu_) || lambda.length() > nu_.length() + rem) return zero();
    if (rem == 0) return lambda == nu_ ? unit_ : zero();
    auto key = std::make_pair(lambda, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    X acc = zero();
    for (const Partition& mu : partitions_below(lambda)) {
      if (!mu.contains(nu_) || mu.length() > nu_.length() + rem - 1) continue;
      X tail = rec(mu, k + 1);
      if (is_zero_scalar(tail)) continue;
      acc = acc + step_(lambda, mu, k) * tail;
    }
    memo_.emplace(key, acc);
    return acc;
  }
  X zero() const { return unit_ * Rational(0); }

  int n_;
  Partition nu_;
  X unit_;
  Step step_;
  std::map<std::pair<Partition, int>, X> memo_;
};

// Branching evaluation of F_{λ/ν}(x_1..x_n | A,B) = Σ_{μ≺λ} F_{λ/μ}(x_1|A,B) F_{μ/ν}(x_2..x_n|τA,B).
// One instance per point, ν and parameter set.
template <class X, class K>
class Branching {
 public:
  Branching(std::vector<X> xs, Partition nu, ParamSeq A, ParamSeq B, K q)
      : xs_(std::move(xs)),
        A_(std::move(A)),
        B_(std::move(B)),
        q_(std::move(q)),
        chain_(static_cast<int>(xs_.size()), std::move(nu), detail::unit_like(xs_, q_),
               [this](const Partition& l, const Partition& m, int k) {
                 return f_one_var(l, m, xs_[static_cast<size_t>(k)], A_.shift(static_cast<size_t>(k)), B_, q_);
               }) {}
  Branching(const Branching&) = delete;
  Branching& operator=(const Branching&) = delete;

  X value(const Partition& lambda) { return chain_.value(lambda); }

 private:
  std::vector<X> xs_;
  ParamSeq A_, B_;
  K q_;
  ChainSum<X> chain_;
};

template <class X, class K>
X f_skew(const Partition& lambda, const Partition& nu, const std::vector<X>& xs, const ParamSeq& A,
         const ParamSeq& B, const K& q) {
  return Branching<X, K>(xs, nu, A, B, q).value(lambda);
}

// Symbolic F_{λ/ν}(x_1..x_n | A,B) as a symmetric polynomial.
SymPoly f_skew_symbolic(const Partition& lambda, const Partition& nu, int n, const ParamSeq& A, const ParamSeq& B,
                        const Rational& q);

// F*_{λ/μ}(y_1..y_m | A,B) = ψ_λ(A,B)/ψ_μ(τ^m A,B) F_{λ/μ}(y | A,B)
template <class X, class K>
X f_dual(const Partition& lambda, const Partition& mu, const std::vector<X>& ys, const ParamSeq& A,
         const ParamSeq& B, const K& q) {
  X f = f_skew(lambda, mu, ys, A, B, q);
  if (is_zero_scalar(f)) return f;
  const K ratio = psi(lambda, A, B, q) * detail::denominator_inverse(psi(mu, A.shift(ys.size()), B, q));
  return f * ratio;
}

// G^n_μ(x_1..x_n | A,B) = ∏_i ∏_{r≥1} (x_i/b_r;q)_{μ_r-μ_{r+1}}/(a_i/b_r;q)_{μ_r-μ_{r+1}}
template <class X, class K>
X g_basis(const Partition& mu, const std::vector<X>& xs, const ParamSeq& A, const ParamSeq& B, const K& q) {
  X acc = detail::unit_like(xs, q);
  K coef = one_like(q);
  const int n = static_cast<int>(xs.size());
  for (int r = 1; r <= mu.length(); ++r) {
    const int g = detail::gap(mu, r);
    if (g == 0) continue;
    const K binv = detail::denominator_inverse(detail::param(q, B, r));
    for (int i = 1; i <= n; ++i) {
      const X& x = xs[static_cast<size_t>(i - 1)];
      K qb = binv;
      for (int k = 0; k < g; ++k) {
        acc = acc * (lift(x, Rational(1)) - x * qb);
        qb = qb * q;
      }
      coef = coef * detail::denominator_inverse(q_pochhammer(K(detail::param(q, A, i) * binv), q, g));
    }
  }
  return acc * coef;
}

SymPoly g_basis_symbolic(const Partition& mu, int n, const ParamSeq& A, const ParamSeq& B, const Rational& q);

// H_λ(A,B) = (-1)^{λ_1} q^{λ_1(λ_1-1)/2} ∏_i (a_i/b_{i-1})^{λ_i}
//            ∏_{i,j} (q^{λ_{i+1}-λ_i} a_{j+i}/a_i;q)_{λ_{j+i}-λ_{j+i+1}} / (a_{j+i}/b_j;q)_{λ_{j+i}-λ_{j+i+1}}
template <class K>
K h_value(const Partition& lambda, const ParamSeq& A, const ParamSeq& B, int n, const K& q) {
  const int l1 = lambda.part(1);
  K r = power(q, static_cast<long>(l1) * (l1 - 1) / 2);
  if (l1 % 2) r = -r;
  for (int i = 1; i <= n; ++i)
    if (lambda.part(i))
      r = r * power(K(detail::param(q, A, i) * detail::denominator_inverse(detail::param(q, B, i - 1))),
                    lambda.part(i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int e = detail::gap(lambda, j + i);
      if (e == 0) continue;
      const K aji = detail::param(q, A, j + i);
      const K top = power(q, lambda.part(i + 1) - lambda.part(i)) * aji *
                    detail::denominator_inverse(detail::param(q, A, i));
      const K bot = aji * detail::denominator_inverse(detail::param(q, B, j));
      r = r * q_pochhammer(top, q, e) * detail::denominator_inverse(q_pochhammer(bot, q, e));
    }
  return r;
}

// Σ_λ F_{λ/μ}(x|A,B) F*_{λ/ν}(y|B̄,Ā) against ∏ (a_i y_j;q)_∞(x_i/b_j;q)_∞/((x_i y_j;q)_∞(a_i/b_j;q)_∞)
// times Σ_λ F*_{μ/λ}(y|B̄,τ^n Ā) F_{ν/λ}(x|A,τ^m B), at x_i = t·xhat_i, y_j = t·yhat_j, q = t·qhat.
SeriesReport check_cauchy(int n, int m, int D, const GradedPoint& point, const Partition& mu = {},
                          const Partition& nu = {});

struct VanishingTable {
  int n = 0;
  std::vector<Partition> partitions;
  // values[l][m] = F_λ(x^n_A(μ)) for λ = partitions[l], μ = partitions[m]
  RationalMatrix values;
  std::vector<Rational> h;
  std::vector<std::pair<Partition, Partition>> violations;
  bool pass = false;
};

VanishingTable vanishing_report(int n, int wmax, const ParamSeq& A, const ParamSeq& B, const Rational& q);

struct TransitionReport {
  int n = 0;
  std::vector<Partition> partitions;
  // coeff[l][m] = c_{λμ} with G^n_μ = Σ_λ c_{λμ} F_λ
  RationalMatrix coeff;
  bool triangular = false;
  bool diagonal_nonzero = false;
  bool diagonal_matches_dual = false;
  bool reproduces = false;
  bool pass = false;
};

// Solves for c_{λμ} from evaluations at x^n_A(ν), then checks triangularity, the diagonal
// c_{μμ} = F*_μ(x^n_B̄(μ)|B̄,Ā), and the expansion at each extra point.
TransitionReport gf_transition(int n, int wmax, const ParamSeq& A, const ParamSeq& B, const Rational& q,
                               const std::vector<std::vector<Rational>>& extra_points);

}  // namespace sqw
