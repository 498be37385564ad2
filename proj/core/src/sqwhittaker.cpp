#include "sqw/sqwhittaker.hpp"

#include <algorithm>

namespace sqw {

namespace {

std::vector<Poly> variables(int n) {
  std::vector<Poly> xs;
  for (int i = 0; i < n; ++i) xs.push_back(Poly::variable(n, i));
  return xs;
}

std::vector<TruncSeries> graded(const std::vector<Rational>& hats, int D) {
  std::vector<TruncSeries> out;
  for (const Rational& h : hats) out.push_back(TruncSeries::variable(D, h));
  return out;
}

// Lower bound on the t-valuation of F_λ(x_1..x_n) under the grading.
int straight_bound(const Partition& lambda, int n) {
  int s = 0;
  for (int r = 1; r <= lambda.length(); ++r) s += std::max(lambda.part(r) - (n - r + 1), 0);
  return s;
}

// Lower bound on the t-valuation of F_{λ/μ}(x_1..x_n).
int skew_bound(const Partition& lambda, const Partition& mu, int n) {
  int s = 0;
  for (int r = 1; r <= lambda.length(); ++r) s += std::max(lambda.part(r) - mu.part(r) - n, 0);
  return s;
}

}  // namespace

SymPoly f_skew_symbolic(const Partition& lambda, const Partition& nu, int n, const ParamSeq& A, const ParamSeq& B,
                        const Rational& q) {
  if (n == 0) return SymPoly(0, lambda == nu ? Rational(1) : Rational(0));
  return SymPoly::from_poly(f_skew(lambda, nu, variables(n), A, B, q));
}

SymPoly g_basis_symbolic(const Partition& mu, int n, const ParamSeq& A, const ParamSeq& B, const Rational& q) {
  if (n == 0) return SymPoly(0, Rational(1));
  return SymPoly::from_poly(g_basis(mu, variables(n), A, B, q));
}

SeriesReport check_cauchy(int n, int m, int D, const GradedPoint& p, const Partition& mu, const Partition& nu) {
  SeriesReport rep;
  rep.identity = "cauchy";
  rep.truncation = D;
  rep.parameters = describe_point(p);
  rep.parameters.emplace_back("n", std::to_string(n));
  rep.parameters.emplace_back("m", std::to_string(m));
  if (!mu.empty() || !nu.empty()) {
    rep.parameters.emplace_back("mu", mu.str());
    rep.parameters.emplace_back("nu", nu.str());
  }
  if (static_cast<int>(p.xhat.size()) < n || static_cast<int>(p.yhat.size()) < m)
    throw Error(Errc::OutOfRange, "point has too few variables");
  std::vector<Rational> xh(p.xhat.begin(), p.xhat.begin() + n), yh(p.yhat.begin(), p.yhat.begin() + m);
  const std::vector<TruncSeries> xs = graded(xh, D), ys = graded(yh, D);
  const TruncSeries q = TruncSeries::variable(D, p.qhat);
  const ParamSeq Ab = p.A.invert(), Bb = p.B.invert();
  const bool straight = mu.empty() && nu.empty();

  Branching<TruncSeries, TruncSeries> fx(xs, mu, p.A, p.B, q);
  Branching<TruncSeries, TruncSeries> fy(ys, nu, Bb, Ab, q);
  const TruncSeries norm = detail::denominator_inverse(psi(nu, Bb.shift(static_cast<size_t>(m)), Ab, q));
  const int max_len = std::min(mu.length() + n, nu.length() + m);
  const int max_weight = std::max(mu.weight(), nu.weight()) + std::max(n, m) * max_len + D;
  TruncSeries lhs(Rational(0), D);
  for (const Partition& lambda : enumerate_partitions(max_len, max_weight)) {
    if (!lambda.contains(mu) || !lambda.contains(nu)) continue;
    const int bound = straight ? straight_bound(lambda, n) + straight_bound(lambda, m)
                               : skew_bound(lambda, mu, n) + skew_bound(lambda, nu, m);
    if (bound > D) continue;
    TruncSeries term = fx.value(lambda);
    if (term.is_zero()) continue;
    term = term * fy.value(lambda);
    if (term.is_zero()) continue;
    term = term * psi(lambda, Bb, Ab, q) * norm;
    rep.contributing.push_back(lambda);
    lhs += term;
  }

  TruncSeries prod(Rational(1), D);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) {
      const TruncSeries ai(p.A.at(static_cast<size_t>(i)), D), bj(p.B.at(static_cast<size_t>(j)), D);
      // (a_i y_j;q)_∞ (x_i/b_j;q)_∞ / ((x_i y_j;q)_∞ (a_i/b_j;q)_∞)
      prod = prod * exchange_factor(ai, bj, xs[static_cast<size_t>(i - 1)], ys[static_cast<size_t>(j - 1)], q, D);
    }
  TruncSeries sum(Rational(0), D);
  if (straight) {
    sum = TruncSeries(Rational(1), D);
  } else {
    for (const Partition& lambda : enumerate_partitions(std::min(mu.length(), nu.length()), std::min(mu.weight(), nu.weight()))) {
      if (!mu.contains(lambda) || !nu.contains(lambda)) continue;
      TruncSeries term = f_dual(mu, lambda, ys, Bb, Ab.shift(static_cast<size_t>(n)), q);
      if (term.is_zero()) continue;
      sum += term * f_skew(nu, lambda, xs, p.A, p.B.shift(static_cast<size_t>(m)), q);
    }
  }
  rep.lhs = lhs;
  rep.rhs = prod * sum;
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

VanishingTable vanishing_report(int n, int wmax, const ParamSeq& A, const ParamSeq& B, const Rational& q) {
  VanishingTable tab;
  tab.n = n;
  tab.partitions = enumerate_partitions(n, wmax);
  const size_t N = tab.partitions.size();
  tab.values.assign(N, std::vector<Rational>(N));
  for (size_t m = 0; m < N; ++m) {
    const Partition& mu = tab.partitions[m];
    Branching<Rational, Rational> f(grid_point_q(A, q, mu, n), Partition(), A, B, q);
    for (size_t l = 0; l < N; ++l) tab.values[l][m] = f.value(tab.partitions[l]);
  }
  bool ok = true;
  for (size_t l = 0; l < N; ++l) {
    const Partition& lambda = tab.partitions[l];
    tab.h.push_back(h_value(lambda, A, B, n, q));
    for (size_t m = 0; m < N; ++m) {
      const Partition& mu = tab.partitions[m];
      const bool zero = tab.values[l][m].is_zero();
      bool bad = mu.contains(lambda) ? zero : !zero;
      if (l == m && tab.values[l][m] != tab.h.back()) bad = true;
      if (bad) {
        tab.violations.emplace_back(lambda, mu);
        ok = false;
      }
    }
  }
  tab.pass = ok;
  return tab;
}

TransitionReport gf_transition(int n, int wmax, const ParamSeq& A, const ParamSeq& B, const Rational& q,
                               const std::vector<std::vector<Rational>>& extra_points) {
  TransitionReport rep;
  rep.n = n;
  rep.partitions = enumerate_partitions(n, wmax);
  const auto& P = rep.partitions;
  const size_t N = P.size();
  RationalMatrix F(N, std::vector<Rational>(N)), G(N, std::vector<Rational>(N));
  for (size_t v = 0; v < N; ++v) {
    const std::vector<Rational> pt = grid_point_q(A, q, P[v], n);
    Branching<Rational, Rational> f(pt, Partition(), A, B, q);
    for (size_t l = 0; l < N; ++l) F[v][l] = f.value(P[l]);
    for (size_t m = 0; m < N; ++m) G[v][m] = g_basis(P[m], pt, A, B, q);
  }
  rep.coeff = solve_linear(F, G);

  rep.triangular = true;
  rep.diagonal_nonzero = true;
  rep.diagonal_matches_dual = true;
  const ParamSeq Ab = A.invert(), Bb = B.invert();
  for (size_t m = 0; m < N; ++m) {
    for (size_t l = 0; l < N; ++l)
      if (!P[m].contains(P[l]) && !rep.coeff[l][m].is_zero()) rep.triangular = false;
    if (rep.coeff[m][m].is_zero()) rep.diagonal_nonzero = false;
    const Rational dual =
        f_dual(P[m], Partition(), grid_point_q(Bb, q, P[m], n), Bb, Ab, q);
    if (dual != rep.coeff[m][m]) rep.diagonal_matches_dual = false;
  }

  rep.reproduces = true;
  for (const auto& x : extra_points) {
    Branching<Rational, Rational> f(x, Partition(), A, B, q);
    std::vector<Rational> fv;
    for (size_t l = 0; l < N; ++l) fv.push_back(f.value(P[l]));
    for (size_t m = 0; m < N; ++m) {
      Rational s = 0;
      for (size_t l = 0; l < N; ++l) s += rep.coeff[l][m] * fv[l];
      if (s != g_basis(P[m], x, A, B, q)) rep.reproduces = false;
    }
  }
  rep.pass = rep.triangular && rep.diagonal_nonzero && rep.diagonal_matches_dual && rep.reproduces;
  return rep;
}

}  // namespace sqw
