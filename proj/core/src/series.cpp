#include "sqw/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "sqw/error.hpp"

namespace sqw {

TruncSeries::TruncSeries(const Rational& c, int order) {
  if (order < 0) throw Error(Errc::OutOfRange, "negative truncation order");
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
  c_[0] = c;
}

TruncSeries TruncSeries::from_coeffs(std::vector<Rational> coeffs, int order) {
  TruncSeries s(Rational(0), order);
  for (size_t k = 0; k < coeffs.size() && k < s.c_.size(); ++k) s.c_[k] = std::move(coeffs[k]);
  return s;
}

TruncSeries TruncSeries::variable(int order, const Rational& scale) {
  TruncSeries s(Rational(0), order);
  if (order >= 1) s.c_[1] = scale;
  return s;
}

int TruncSeries::valuation() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return order() + 1;
}

TruncSeries TruncSeries::truncated(int order) const {
  TruncSeries s(Rational(0), order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) s.c_[k] = c_[k];
  return s;
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) os << c_[k];
    else {
      if (c_[k] != Rational(1)) os << c_[k] << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  os << " + O(t^" << order() + 1 << ")";
  return os.str();
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int d = std::min(a.order(), b.order());
  TruncSeries r(Rational(0), d);
  const int va = a.valuation(), vb = b.valuation();
  mpq_class acc, tmp;
  for (int k = va + vb; k <= d; ++k) {
    acc = 0;
    for (int i = va; i <= k - vb; ++i) {
      const auto& x = a.c_[i].raw();
      const auto& y = b.c_[k - i].raw();
      if (sgn(x) == 0 || sgn(y) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
      acc += tmp;
    }
    r.c_[k] = Rational(acc);
  }
  return r;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& o) { return *this = *this * o; }

TruncSeries& TruncSeries::operator/=(const TruncSeries& o) { return *this = *this * series_inv(o); }

TruncSeries& TruncSeries::operator*=(const Rational& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

TruncSeries& TruncSeries::operator/=(const Rational& r) {
  Rational inv = r.inverse();
  return *this *= inv;
}

TruncSeries operator/(const Rational& a, const TruncSeries& b) { return series_inv(b) * a; }

TruncSeries operator-(const TruncSeries& a) {
  TruncSeries r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  const int d = std::min(a.order(), b.order());
  for (int k = 0; k <= d; ++k)
    if (a.c_[k] != b.c_[k]) return false;
  return true;
}

TruncSeries series_inv(const TruncSeries& a) {
  if (!a.has_unit_constant()) throw Error(Errc::NotInvertible, "series with zero constant term");
  const int d = a.order();
  std::vector<Rational> r(static_cast<size_t>(d) + 1);
  const Rational c0inv = a[0].inverse();
  r[0] = c0inv;
  for (int k = 1; k <= d; ++k) {
    Rational s(0);
    for (int i = 1; i <= k; ++i)
      if (!a[i].is_zero()) s += a[i] * r[k - i];
    r[k] = -s * c0inv;
  }
  return TruncSeries::from_coeffs(std::move(r), d);
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.str(); }

}  // namespace sqw
