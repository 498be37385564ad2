#include "sqw/degenerations.hpp"

#include <functional>

namespace sqw {

namespace {

std::vector<Poly> variables(int n) {
  std::vector<Poly> xs;
  for (int i = 0; i < n; ++i) xs.push_back(Poly::variable(n, i));
  return xs;
}

}  // namespace

SymPoly f_tilde_symbolic(const Partition& lambda, const Partition& nu, int n, const ParamSeq& A, const Rational& q) {
  if (n == 0) return SymPoly(0, lambda == nu ? Rational(1) : Rational(0));
  return SymPoly::from_poly(f_tilde(lambda, nu, variables(n), A, q));
}

SymPoly f_el_symbolic(const Partition& lambda, const Partition& nu, int n, const ParamSeq& C, const Rational& d) {
  if (n == 0) return SymPoly(0, lambda == nu ? Rational(1) : Rational(0));
  return SymPoly::from_poly(f_el(lambda, nu, variables(n), C, d));
}

Rational h_tilde(const Partition& lambda, const ParamSeq& A, const Rational& q, int n) {
  const int l1 = lambda.part(1);
  Rational r = q.pow(static_cast<long>(l1) * (l1 - 1) / 2);
  if (l1 % 2) r = -r;
  for (int i = 1; i <= n; ++i)
    if (lambda.part(i)) r *= A.at(static_cast<size_t>(i)).pow(lambda.part(i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int e = detail::gap(lambda, j + i);
      if (e == 0) continue;
      const Rational top = q.pow(lambda.part(i + 1) - lambda.part(i)) * A.at(static_cast<size_t>(j + i)) /
                           A.at(static_cast<size_t>(i));
      r *= q_pochhammer(top, q, e);
    }
  return r;
}

Rational h_el(const Partition& lambda, const ParamSeq& C, const Rational& d, int n) {
  Rational r = (-d).pow(lambda.part(1));
  if (lambda.weight() % 2) r = -r;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int e = detail::gap(lambda, i + j);
      for (int k = 1; k <= e; ++k)
        r *= C.at(static_cast<size_t>(j + i)) - C.at(static_cast<size_t>(i)) +
             d * Rational(lambda.part(i + 1) - lambda.part(i) + k - 1);
    }
  return r;
}

namespace {

SymPoly chain_branching(const Partition& lambda, int n,
                        const std::function<Rational(const Partition&, const Partition&)>& coef) {
  if (n == 0) return SymPoly(0, lambda.empty() ? Rational(1) : Rational(0));
  const std::vector<Poly> xs = variables(n);
  ChainSum<Poly> chain(n, Partition(), Poly(n, Rational(1)), [&](const Partition& l, const Partition& m, int k) {
    const Rational c = coef(l, m);
    Poly p(n, c);
    for (int i = 0; i < l.weight() - m.weight(); ++i) p = p * xs[static_cast<size_t>(k)];
    return p;
  });
  return SymPoly::from_poly(chain.value(lambda));
}

}  // namespace

SymPoly q_whittaker_q(const Partition& lambda, int n, const Rational& q) {
  return chain_branching(lambda, n, [&](const Partition& l, const Partition& m) {
    Rational c = 1;
    for (int r = 1; r <= l.length(); ++r)
      c *= q_pochhammer(q, q, m.part(r) - m.part(r + 1)) /
           (q_pochhammer(q, q, l.part(r) - m.part(r)) * q_pochhammer(q, q, m.part(r) - l.part(r + 1)));
    return c;
  });
}

SymPoly q_whittaker_p(const Partition& lambda, int n, const Rational& q) {
  return chain_branching(lambda, n, [&](const Partition& l, const Partition& m) {
    Rational c = 1;
    for (int r = 1; r <= l.length(); ++r) c *= q_binomial(l.part(r) - l.part(r + 1), l.part(r) - m.part(r), q);
    return c;
  });
}

Rational q_whittaker_b(const Partition& lambda, const Rational& q) {
  Rational b = 1;
  for (int r = 1; r <= lambda.length(); ++r) b /= q_pochhammer(q, q, lambda.part(r) - lambda.part(r + 1));
  return b;
}

TruncSeries exp_difference(const Rational& u, const Rational& v, int order) {
  std::vector<Rational> c;
  Rational up = u, vp = v, fact = 1;
  for (int k = 0; k <= order; ++k) {
    fact *= Rational(k + 1);
    c.push_back((up - vp) / fact);
    up *= u;
    vp *= v;
  }
  return TruncSeries::from_coeffs(std::move(c), order);
}

namespace {

TruncSeries eps_one_var(const Partition& lambda, const Partition& mu, const Rational& r, const ParamSeq& C,
                        const Rational& d, int order) {
  if (!interlaces(lambda, mu)) return TruncSeries(Rational(0), order);
  TruncSeries acc(Rational(1), order);
  // (1 - q^j)/ε
  auto qq = [&](int k) {
    TruncSeries p(Rational(1), order);
    for (int j = 1; j <= k; ++j) p *= exp_difference(Rational(0), d * Rational(j), order);
    return p;
  };
  for (int i = 1; i <= lambda.length(); ++i) {
    const int k1 = lambda.part(i) - mu.part(i), k2 = mu.part(i) - lambda.part(i + 1),
              k3 = mu.part(i) - mu.part(i + 1);
    for (int j = 0; j < k1; ++j) acc *= exp_difference(r, C.at(static_cast<size_t>(i)) + d * Rational(j), order);
    acc *= qq(k3);
    acc *= series_inv(qq(k1) * qq(k2));
  }
  return acc;
}

}  // namespace

TruncSeries f_tilde_eps_scaled(const Partition& lambda, const Partition& mu, const std::vector<Rational>& rs,
                               const ParamSeq& C, const Rational& d, int order) {
  if (d.is_zero()) throw Error(Errc::DivisionByZero, "d must be nonzero");
  ChainSum<TruncSeries> chain(static_cast<int>(rs.size()), mu, TruncSeries(Rational(1), order),
                              [&](const Partition& l, const Partition& m, int k) {
                                return eps_one_var(l, m, rs[static_cast<size_t>(k)],
                                                   C.shift(static_cast<size_t>(k)), d, order);
                              });
  return chain.value(lambda);
}

}  // namespace sqw
