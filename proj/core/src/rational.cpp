#include "sqw/rational.hpp"

#include <cctype>
#include <ostream>

#include "sqw/error.hpp"

namespace sqw {

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sqw
