#include "sqw/transfer.hpp"

#include <string>

namespace sqw {

std::vector<std::pair<std::string, std::string>> describe_point(const GradedPoint& p) {
  std::vector<std::pair<std::string, std::string>> out;
  auto seq = [&](const ParamSeq& s, const char* name) {
    for (size_t i = 0; i < s.size(); ++i) out.emplace_back(name + std::to_string(i), s.at(i).str());
  };
  seq(p.A, "a");
  seq(p.B, "b");
  for (size_t i = 0; i < p.xhat.size(); ++i) out.emplace_back("xhat" + std::to_string(i + 1), p.xhat[i].str());
  for (size_t j = 0; j < p.yhat.size(); ++j) out.emplace_back("yhat" + std::to_string(j + 1), p.yhat[j].str());
  out.emplace_back("qhat", p.qhat.str());
  return out;
}

TruncSeries exchange_factor(const TruncSeries& a, const TruncSeries& b, const TruncSeries& x, const TruncSeries& u,
                            const TruncSeries& q, int D) {
  const TruncSeries binv = detail::denominator_inverse(b);
  TruncSeries num = q_pochhammer_inf(a * u, q, D) * q_pochhammer_inf(x * binv, q, D);
  TruncSeries den = q_pochhammer_inf(a * binv, q, D) * q_pochhammer_inf(x * u, q, D);
  return num * detail::denominator_inverse(den);
}

SeriesReport check_qgauss(int J, int L, const Rational& a, const Rational& b, int D, const Rational& xhat,
                          const Rational& yhat, const Rational& qhat) {
  SeriesReport rep;
  rep.identity = "q-gauss";
  rep.truncation = D;
  rep.parameters = {{"J", std::to_string(J)}, {"L", std::to_string(L)}, {"a", a.str()},
                    {"b", b.str()},           {"xhat", xhat.str()},    {"yhat", yhat.str()},
                    {"qhat", qhat.str()}};
  const TruncSeries x = TruncSeries::variable(D, xhat), u = TruncSeries::variable(D, yhat),
                    q = TruncSeries::variable(D, qhat);
  const TruncSeries as(a, D), bs(b, D);
  // (a/x;q)_I x^I has valuation ≥ I-1, so I ≤ D+1 suffices.
  TruncSeries lhs(Rational(0), D);
  for (long I = std::max(0, L - J); I <= D + 1; ++I) lhs += qgauss_term<TruncSeries>(I, J, L, as, bs, x, u, q);
  const TruncSeries binv = detail::denominator_inverse(bs);
  TruncSeries rhs = exchange_factor(as, bs, x, u, q, D) * power(binv, L) * detail::shifted_product(x, as, q, L) *
                    detail::inv_qq(q, L);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.pass = lhs == rhs;
  return rep;
}

std::vector<Partition> partitions_above(const Partition& mu, int extra) {
  std::vector<Partition> out;
  const int len = mu.length() + 1;
  std::vector<int> parts(static_cast<size_t>(len), 0);
  // λ_1 ∈ [μ_1, μ_1+extra], λ_r ∈ [μ_r, μ_{r-1}] for r ≥ 2
  auto rec = [&](auto&& self, int r) -> void {
    if (r > len) {
      out.emplace_back(parts);
      return;
    }
    const int lo = mu.part(r), hi = r == 1 ? mu.part(1) + extra : mu.part(r - 1);
    for (int v = lo; v <= hi; ++v) {
      parts[static_cast<size_t>(r - 1)] = v;
      self(self, r + 1);
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

int excess(const Partition& lambda, const Partition& mu, int slack) {
  int s = 0;
  for (int r = 1; r <= lambda.length(); ++r) s += std::max(lambda.part(r) - mu.part(r) - slack, 0);
  return s;
}

}  // namespace

SeriesReport check_exchange(const Partition& mu, const Partition& nu, int D, const GradedPoint& p) {
  SeriesReport rep;
  rep.identity = "exchange";
  rep.truncation = D;
  rep.parameters = describe_point(p);
  rep.parameters.emplace_back("mu", mu.str());
  rep.parameters.emplace_back("nu", nu.str());
  const TruncSeries x = TruncSeries::variable(D, p.xhat.at(0)), u = TruncSeries::variable(D, p.yhat.at(0)),
                    q = TruncSeries::variable(D, p.qhat);

  // Each factor has valuation ≥ Σ_r max(λ_r - κ_r - 1, 0) for its lower partition κ.
  TruncSeries lhs(Rational(0), D);
  for (const Partition& lambda : partitions_above(mu, D + 1)) {
    if (!interlaces(lambda, nu) || excess(lambda, mu, 1) + excess(lambda, nu, 1) > D) continue;
    TruncSeries term = b_element(x, p.A, p.B, lambda, mu, q);
    if (term.is_zero()) continue;
    term = term * b_star_element_inv(u, p.A, p.B, nu, lambda, q);
    if (term.is_zero()) continue;
    rep.contributing.push_back(lambda);
    lhs += term;
  }

  TruncSeries sum(Rational(0), D);
  for (const Partition& lambda : partitions_below(mu)) {
    if (!interlaces(nu, lambda)) continue;
    TruncSeries term = b_element(x, p.A, p.B.shift(), nu, lambda, q) *
                       b_star_element_inv(u, p.A.shift(), p.B, lambda, mu, q);
    sum += term;
  }
  const TruncSeries a1(p.A.at(1), D), b1(p.B.at(1), D);
  rep.lhs = lhs;
  rep.rhs = exchange_factor(a1, b1, x, u, q, D) * sum;
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace sqw
