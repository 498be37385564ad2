#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqw/error.hpp"
#include "sqw/partition.hpp"
#include "sqw/rational.hpp"

namespace sqw {

// Sparse polynomial in x_1..x_n over Q.
class Poly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  explicit Poly(int nvars = 0) : n_(nvars) {}
  Poly(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);
  static Poly from_terms(int nvars, Terms terms);

  int nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const;
  int degree_in(int var) const;
  Rational coefficient(const Exponents& e) const;

  // Sum of terms of maximal total degree. Throws Errc::ZeroPolynomial on 0.
  Poly top_component() const;
  // x_i -> x_i + c for every i
  Poly shift_all(const Rational& c) const;
  Poly swap_vars(int i, int j) const;
  // Polynomial in the remaining variables given by the coefficient of x_var^k.
  Poly coefficient_of(int var, int k) const;
  // Drops the variable at index var, setting it to value.
  Poly substitute(int var, const Rational& value) const;
  bool is_symmetric() const;

  template <class K>
  K evaluate(const std::vector<K>& point) const;

  std::string str() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& r);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(Poly a);
  friend Poly operator+(Poly a, const Rational& r) { return a += Poly(a.n_, r); }
  friend Poly operator-(Poly a, const Rational& r) { return a -= Poly(a.n_, r); }
  friend Poly operator+(const Rational& r, Poly a) { return a += Poly(a.n_, r); }
  friend Poly operator-(const Rational& r, const Poly& a) { return Poly(a.n_, r) - a; }
  friend Poly operator*(Poly a, const Rational& r) { return a *= r; }
  friend Poly operator*(const Rational& r, Poly a) { return a *= r; }
  friend Poly operator/(Poly a, const Rational& r) { return a *= r.inverse(); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

 private:
  void add_term(const Exponents& e, const Rational& c);
  int n_;
  Terms t_;
};

// Symmetric polynomial stored in the monomial-symmetric basis: one coefficient per orbit.
class SymPoly {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit SymPoly(int nvars = 0) : n_(nvars) {}
  SymPoly(int nvars, const Rational& c);
  // Throws Errc::NotSymmetric unless p is symmetric.
  static SymPoly from_poly(const Poly& p);
  static SymPoly from_terms(int nvars, Terms terms);
  static SymPoly monomial(int nvars, const Partition& mu);
  // e_{k_1} e_{k_2} ... for the parts k of lambda
  static SymPoly elementary(int nvars, const Partition& lambda);

  int nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coefficient(const Partition& mu) const;
  int total_degree() const;
  Poly to_poly() const;

  template <class K>
  K evaluate(const std::vector<K>& point) const;

  std::string str() const;

  friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(SymPoly a, const Rational& r);
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

 private:
  int n_;
  Terms t_;
};

inline Poly lift(const Poly& proto, const Rational& v) { return Poly(proto.nvars(), v); }

enum class SymBasis { Monomial, Elementary };

SymPoly sympoly_top_component(const SymPoly& p);

// Monomial: key μ means m_μ. Elementary: key λ means e_{λ'} (so e_{λ'} ↦ {λ: 1}).
std::map<Partition, Rational> sympoly_expand_basis(const SymPoly& p, SymBasis basis);
SymPoly sympoly_from_basis(int nvars, const std::map<Partition, Rational>& coeffs, SymBasis basis);

// m_μ(point) summed over distinct permutations of μ padded to point.size().
template <class K>
K monomial_symmetric_eval(const Partition& mu, const std::vector<K>& point);

}  // namespace sqw

#include "sqw/poly_impl.hpp"
