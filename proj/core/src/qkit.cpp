#include "sqw/qkit.hpp"

namespace sqw {

TruncSeries q_pochhammer_inf(const TruncSeries& x, const TruncSeries& q, int D) {
  if (q.valuation() == 0) throw Error(Errc::DivergentProduct, "q has a nonzero constant term");
  const TruncSeries qq = q.truncated(D);
  TruncSeries term = x.truncated(D);
  TruncSeries r(Rational(1), D);
  while (!term.is_zero()) {
    r = r * (Rational(1) - term);
    term = term * qq;
  }
  return r;
}

}  // namespace sqw
