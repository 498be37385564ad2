#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqw/rational.hpp"

namespace sqw {

// Power series in t over Q, truncated modulo t^(order+1).
// Binary operations between series of different orders truncate to the smaller order.
class TruncSeries {
 public:
  TruncSeries() : TruncSeries(Rational(0), 0) {}
  TruncSeries(const Rational& c, int order);
  static TruncSeries from_coeffs(std::vector<Rational> coeffs, int order);
  // scale * t
  static TruncSeries variable(int order, const Rational& scale = Rational(1));

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  // order()+1 for the zero series.
  int valuation() const;
  bool is_zero() const { return valuation() > order(); }
  bool has_unit_constant() const { return !c_[0].is_zero(); }
  TruncSeries truncated(int order) const;
  std::string str() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const TruncSeries& o);
  TruncSeries& operator/=(const TruncSeries& o);
  TruncSeries& operator+=(const Rational& r) { c_[0] += r; return *this; }
  TruncSeries& operator-=(const Rational& r) { c_[0] -= r; return *this; }
  TruncSeries& operator*=(const Rational& r);
  TruncSeries& operator/=(const Rational& r);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator/(TruncSeries a, const TruncSeries& b) { return a /= b; }
  friend TruncSeries operator+(TruncSeries a, const Rational& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const Rational& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rational& b) { return a *= b; }
  friend TruncSeries operator/(TruncSeries a, const Rational& b) { return a /= b; }
  friend TruncSeries operator+(const Rational& a, TruncSeries b) { return b += a; }
  friend TruncSeries operator-(const Rational& a, const TruncSeries& b) { return -b + a; }
  friend TruncSeries operator*(const Rational& a, TruncSeries b) { return b *= a; }
  friend TruncSeries operator/(const Rational& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

 private:
  std::vector<Rational> c_;
};

// Multiplicative inverse modulo t^(order+1). Throws Errc::NotInvertible on a zero constant term.
TruncSeries series_inv(const TruncSeries& a);

std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

inline bool is_invertible(const TruncSeries& s) { return s.has_unit_constant(); }
inline TruncSeries lift(const TruncSeries& proto, const Rational& v) { return TruncSeries(v, proto.order()); }

}  // namespace sqw
