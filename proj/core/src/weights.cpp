#include "sqw/weights.hpp"

namespace sqw {

namespace detail {

bool vertex_labels_ok(const Composition& I, const Composition& J, const Composition& K, const Composition& L) {
  require_rank(I, J);
  require_rank(I, K);
  require_rank(I, L);
  if (!I.nonnegative() || !J.nonnegative() || !K.nonnegative() || !L.nonnegative()) return false;
  return I + J == K + L;
}

void for_each_in_box(const Composition& upper, const std::function<void(const Composition&)>& fn) {
  if (!upper.nonnegative()) return;
  Composition P = Composition::zeros(upper.rank());
  while (true) {
    fn(P);
    size_t i = 0;
    while (i < P.rank() && P[i] == upper[i]) P[i++] = 0;
    if (i == P.rank()) return;
    ++P[i];
  }
}

}  // namespace detail

YbeResult check_ybe_bbb(const YbeParams& p, const YbeBoundary& bd) {
  const auto& [A1, A2, A3, B1, B2, B3] = bd;
  const Rational& q = p.q;
  YbeResult res;
  detail::for_each_in_box(A2 + A3, [&](const Composition& C3) {
    const Composition C2 = A2 + A3 - C3, C1 = A1 + C3 - B3;
    if (!C1.nonnegative()) return;
    res.lhs += weight_wb(p.a3, p.b1, p.b2, q, C1, C2, B2, B1) * weight_wb(p.a2, p.b1, p.b3, q, A1, C3, B3, C1) *
               weight_wb(p.a3, p.b2, p.b3, q, A2, A3, C3, C2);
  });
  detail::for_each_in_box(A1 + A2, [&](const Composition& C2) {
    const Composition C1 = A1 + A2 - C2, C3 = C1 + A3 - B1;
    if (!C3.nonnegative()) return;
    res.rhs += weight_wb(p.a2, p.b2, p.b3, q, C2, C3, B3, B2) * weight_wb(p.a3, p.b1, p.b3, q, C1, A3, C3, B1) *
               weight_wb(p.a2, p.b1, p.b2, q, A1, A2, C2, C1);
  });
  res.pass = res.lhs == res.rhs;
  return res;
}

YbeResult check_ybe_mixed(const YbeParams& p, const YbeBoundary& bd) {
  const auto& [A1, A2, A3, B1, B2, B3] = bd;
  const Rational& q = p.q;
  YbeResult res;
  detail::for_each_in_box(A2 + A3, [&](const Composition& C3) {
    const Composition C2 = A2 + A3 - C3, C1 = A1 + C3 - B3;
    if (!C1.nonnegative()) return;
    res.lhs += weight_wb(p.a2, p.b1, p.b3, q, C1, C2, B2, B1) *
               weight_r(p.a1, p.b1, p.a3, p.b2, q, A1, C3, B3, C1, RForm::PSum1) *
               weight_wa(p.a2, p.a3, p.b2, q, A2, A3, C3, C2);
  });
  detail::for_each_in_box(A1 + A2, [&](const Composition& C2) {
    const Composition C1 = A1 + A2 - C2, C3 = C1 + A3 - B1;
    if (!C3.nonnegative()) return;
    res.rhs += weight_wa(p.a1, p.a3, p.b2, q, C2, C3, B3, B2) *
               weight_r(p.a2, p.b1, p.a3, p.b3, q, C1, A3, C3, B1, RForm::PSum1) *
               weight_wb(p.a2, p.b1, p.b2, q, A1, A2, C2, C1);
  });
  res.pass = res.lhs == res.rhs;
  return res;
}

}  // namespace sqw
