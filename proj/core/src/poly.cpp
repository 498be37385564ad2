#include "sqw/poly.hpp"

#include <algorithm>
#include <sstream>

namespace sqw {

namespace {

Partition sorted_partition(const Poly::Exponents& e) {
  std::vector<int> v = e;
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

long orbit_size(const Partition& mu, int n) {
  std::vector<int> e(static_cast<size_t>(n), 0);
  for (int r = 1; r <= mu.length(); ++r) e[r - 1] = mu.part(r);
  std::sort(e.begin(), e.end());
  long cnt = 0;
  do ++cnt;
  while (std::next_permutation(e.begin(), e.end()));
  return cnt;
}

std::string monomial_str(const Poly::Exponents& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string term_join(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, m] : terms) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) os << "-";
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    if (a.sign() < 0) a = -a;
    if (m.empty()) os << a;
    else if (a == Rational(1)) os << m;
    else os << a << "*" << m;
    first = false;
  }
  return os.str();
}

}  // namespace

Poly::Poly(int nvars, const Rational& c) : n_(nvars) {
  if (!c.is_zero()) t_[Exponents(static_cast<size_t>(nvars), 0)] = c;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error(Errc::OutOfRange, "variable index");
  Poly p(nvars);
  Exponents e(static_cast<size_t>(nvars), 0);
  e[i] = 1;
  p.t_[e] = Rational(1);
  return p;
}

Poly Poly::from_terms(int nvars, Terms terms) {
  Poly p(nvars);
  for (auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != nvars) throw Error(Errc::OutOfRange, "exponent vector size");
    p.add_term(e, c);
  }
  return p;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e[var]);
  return d;
}

Rational Poly::coefficient(const Exponents& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

Poly Poly::top_component() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "top component of zero");
  const int d = total_degree();
  Poly r(n_);
  for (const auto& [e, c] : t_) {
    int s = 0;
    for (int x : e) s += x;
    if (s == d) r.t_[e] = c;
  }
  return r;
}

Poly Poly::shift_all(const Rational& c) const {
  Poly r(n_, Rational(0));
  std::vector<Poly> lin;
  for (int i = 0; i < n_; ++i) lin.push_back(variable(n_, i) + c);
  for (const auto& [e, coef] : t_) {
    Poly m(n_, coef);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) m = m * lin[i];
    r += m;
  }
  return r;
}

Poly Poly::swap_vars(int i, int j) const {
  Poly r(n_);
  for (const auto& [e, c] : t_) {
    Exponents f = e;
    std::swap(f[i], f[j]);
    r.t_[f] = c;
  }
  return r;
}

Poly Poly::coefficient_of(int var, int k) const {
  Poly r(n_ - 1);
  for (const auto& [e, c] : t_) {
    if (e[var] != k) continue;
    Exponents f;
    for (int i = 0; i < n_; ++i)
      if (i != var) f.push_back(e[i]);
    r.add_term(f, c);
  }
  return r;
}

Poly Poly::substitute(int var, const Rational& value) const {
  Poly r(n_ - 1);
  for (const auto& [e, c] : t_) {
    Exponents f;
    for (int i = 0; i < n_; ++i)
      if (i != var) f.push_back(e[i]);
    r.add_term(f, c * value.pow(e[var]));
  }
  return r;
}

bool Poly::is_symmetric() const {
  for (int i = 0; i + 1 < n_; ++i)
    if (swap_vars(i, i + 1) != *this) return false;
  return true;
}

std::string Poly::str() const {
  std::vector<std::pair<Rational, std::string>> terms;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) terms.emplace_back(it->second, monomial_str(it->first));
  return term_join(terms);
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.n_ != n_) throw Error(Errc::OutOfRange, "variable count mismatch");
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.n_ != n_) throw Error(Errc::OutOfRange, "variable count mismatch");
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& r) {
  if (r.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [e, c] : t_) c *= r;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.n_ != b.n_) throw Error(Errc::OutOfRange, "variable count mismatch");
  Poly r(a.n_);
  Poly::Exponents e(static_cast<size_t>(a.n_));
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly operator-(Poly a) {
  for (auto& [e, c] : a.t_) c = -c;
  return a;
}

SymPoly::SymPoly(int nvars, const Rational& c) : n_(nvars) {
  if (!c.is_zero()) t_[Partition()] = c;
}

SymPoly SymPoly::from_poly(const Poly& p) {
  SymPoly s(p.nvars());
  std::map<Partition, long> seen;
  for (const auto& [e, c] : p.terms()) {
    Partition mu = sorted_partition(e);
    auto [it, inserted] = s.t_.emplace(mu, c);
    if (!inserted && it->second != c) throw Error(Errc::NotSymmetric, "orbit " + mu.str() + " has unequal coefficients");
    ++seen[mu];
  }
  for (const auto& [mu, cnt] : seen)
    if (cnt != orbit_size(mu, p.nvars())) throw Error(Errc::NotSymmetric, "orbit " + mu.str() + " is incomplete");
  return s;
}

SymPoly SymPoly::from_terms(int nvars, Terms terms) {
  SymPoly s(nvars);
  for (auto& [mu, c] : terms) {
    if (mu.length() > nvars) throw Error(Errc::NotSymmetric, "orbit " + mu.str() + " needs more variables");
    if (!c.is_zero()) s.t_[mu] += c;
    if (s.t_.count(mu) && s.t_[mu].is_zero()) s.t_.erase(mu);
  }
  return s;
}

SymPoly SymPoly::monomial(int nvars, const Partition& mu) {
  SymPoly s(nvars);
  if (mu.length() <= nvars) s.t_[mu] = Rational(1);
  return s;
}

SymPoly SymPoly::elementary(int nvars, const Partition& lambda) {
  SymPoly r(nvars, Rational(1));
  for (int k : lambda.parts()) r = r * monomial(nvars, Partition(std::vector<int>(static_cast<size_t>(k), 1)));
  return r;
}

Rational SymPoly::coefficient(const Partition& mu) const {
  auto it = t_.find(mu);
  return it == t_.end() ? Rational(0) : it->second;
}

int SymPoly::total_degree() const {
  int d = -1;
  for (const auto& [mu, c] : t_) d = std::max(d, mu.weight());
  return d;
}

Poly SymPoly::to_poly() const {
  Poly::Terms terms;
  for (const auto& [mu, c] : t_) {
    std::vector<int> e(static_cast<size_t>(n_), 0);
    for (int r = 1; r <= mu.length(); ++r) e[r - 1] = mu.part(r);
    std::sort(e.begin(), e.end());
    do terms[e] = c;
    while (std::next_permutation(e.begin(), e.end()));
  }
  return Poly::from_terms(n_, std::move(terms));
}

std::string SymPoly::str() const {
  std::vector<std::pair<Rational, std::string>> terms;
  std::vector<std::pair<Partition, Rational>> sorted(t_.begin(), t_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first.weight() > b.first.weight(); });
  for (const auto& [mu, c] : sorted) terms.emplace_back(c, mu.empty() ? std::string() : "m" + mu.str());
  return term_join(terms);
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  if (a.n_ != b.n_) throw Error(Errc::OutOfRange, "variable count mismatch");
  SymPoly r = a;
  for (const auto& [mu, c] : b.t_) {
    r.t_[mu] += c;
    if (r.t_[mu].is_zero()) r.t_.erase(mu);
  }
  return r;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) { return a + b * Rational(-1); }

SymPoly operator*(const SymPoly& a, const SymPoly& b) { return SymPoly::from_poly(a.to_poly() * b.to_poly()); }

SymPoly operator*(SymPoly a, const Rational& r) {
  if (r.is_zero()) a.t_.clear();
  for (auto& [mu, c] : a.t_) c *= r;
  return a;
}

SymPoly sympoly_top_component(const SymPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "top component of zero");
  const int d = p.total_degree();
  SymPoly::Terms t;
  for (const auto& [mu, c] : p.terms())
    if (mu.weight() == d) t[mu] = c;
  return SymPoly::from_terms(p.nvars(), std::move(t));
}

std::map<Partition, Rational> sympoly_expand_basis(const SymPoly& p, SymBasis basis) {
  for (const auto& [mu, c] : p.terms())
    if (mu.length() > p.nvars()) throw Error(Errc::NotSymmetric, "orbit " + mu.str() + " needs more variables");
  if (basis == SymBasis::Monomial) return {p.terms().begin(), p.terms().end()};
  std::map<Partition, Rational> out;
  SymPoly rest = p;
  auto key_less = [](const Partition& a, const Partition& b) {
    return a.weight() != b.weight() ? a.weight() < b.weight() : a < b;
  };
  while (!rest.is_zero()) {
    Partition lead = rest.terms().begin()->first;
    for (const auto& [mu, c] : rest.terms())
      if (key_less(lead, mu)) lead = mu;
    Rational c = rest.coefficient(lead);
    out[lead] += c;
    rest = rest - SymPoly::elementary(p.nvars(), lead.conjugate()) * c;
  }
  return out;
}

SymPoly sympoly_from_basis(int nvars, const std::map<Partition, Rational>& coeffs, SymBasis basis) {
  SymPoly r(nvars);
  for (const auto& [mu, c] : coeffs) {
    SymPoly b = basis == SymBasis::Monomial ? SymPoly::monomial(nvars, mu)
                                            : SymPoly::elementary(nvars, mu.conjugate());
    r = r + b * c;
  }
  return r;
}

}  // namespace sqw
