#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqw/error.hpp"
#include "sqw/partition.hpp"
#include "sqw/poly.hpp"
#include "sqw/rational.hpp"

namespace sqw {

struct GridTag {
  enum class Kind { Raw, QType, LinearType };
  Kind kind = Kind::Raw;
  // q-type: ℧(i;j) = c + a_i q^j
  Rational c, q;
  std::vector<Rational> a;
  // linear-type: ℧(i;j) = c_i + j d
  Rational d;
  std::vector<Rational> cs;

  friend bool operator==(const GridTag&, const GridTag&) = default;
};

const char* grid_kind_name(GridTag::Kind k);

// Table ℧(i;j), 1 ≤ i ≤ n, 0 ≤ j ≤ depth.
class Grid {
 public:
  Grid() = default;
  // values[i-1][j] = ℧(i;j); all rows must have the same length depth+1.
  explicit Grid(std::vector<std::vector<Rational>> values, GridTag tag = {});

  static Grid q_type(const Rational& c, const Rational& q, const std::vector<Rational>& a, int depth);
  static Grid linear_type(const Rational& d, const std::vector<Rational>& cs, int depth);

  int n() const { return static_cast<int>(v_.size()); }
  int depth() const { return v_.empty() ? -1 : static_cast<int>(v_[0].size()) - 1; }
  // Throws Errc::OutOfRange for a bad row, Errc::DepthTooShallow past the depth.
  const Rational& at(int i, int j) const;
  void set(int i, int j, const Rational& v);
  const std::vector<std::vector<Rational>>& values() const { return v_; }
  const GridTag& tag() const { return tag_; }

  // ℧(μ) = (℧(1;μ_1-μ_2), ..., ℧(n;μ_n))
  std::vector<Rational> point(const Partition& mu) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::vector<std::vector<Rational>> v_;
  GridTag tag_;
};

bool grid_nondegenerate(const Grid& g);
// ℧_m
Grid grid_restrict(const Grid& g, int m);
// ℧^k: row n read from column k on; the depth drops by k.
Grid grid_shift(const Grid& g, int k);
// ₗ℧: rows l+1..n
Grid grid_leftshift(const Grid& g, int l);
// ℧ + c
Grid grid_translate(const Grid& g, const Rational& c);

// F_λ(℧(λ)|℧) = ∏_{r≥1} ∏_{i=1}^r ∏_{j=λ_{r+1}}^{λ_r-1} (℧(i;λ_i-λ_{i+1}) - ℧(r;j-λ_{r+1}))
Rational hook_value(const Grid& g, const Partition& lambda);

// The F_λ(x_1..x_n|℧) of degree ≤ |λ| vanishing at ℧(μ) for |μ| ≤ |λ|, μ ≠ λ, with value hook_value at ℧(λ).
// Needs depth ≥ |λ|. Throws Errc::DepthTooShallow, Errc::SingularSystem.
SymPoly solve_f(const Grid& g, const Partition& lambda);

namespace detail {
Rational checked_div(const Rational& a, const Rational& b, const char* what);
}  // namespace detail

// F_(2)(x_1,x_2|℧) from the printed closed form. X is Rational or Poly.
template <class X>
X f2_explicit(const Grid& g, const X& x1, const X& x2) {
  const Rational &a = g.at(1, 0), &b = g.at(1, 1), &c = g.at(2, 0), &d = g.at(2, 1);
  const Rational den = a - c;
  const char* msg = "[1;0] = [2;0]";
  return x1 * x1 + x2 * x2 + detail::checked_div(a + b - c - d, den, msg) * x1 * x2 -
         detail::checked_div(a * a + a * b - c * c - c * d, den, msg) * (x1 + x2) +
         detail::checked_div(a * a * b + a * a * c - a * c * c - c * c * d, den, msg);
}

// F_(3)(x_1,x_2|℧) = (x_1+x_2-[1;2]-[2;0]) F_(2) - κ_2 (x_1-[2;0])(x_2-[2;0])(x_1+x_2-[1;0]-[2;1])
template <class X>
X f3_explicit(const Grid& g, const X& x1, const X& x2) {
  const Rational &a = g.at(1, 0), &b = g.at(1, 1), &b2 = g.at(1, 2), &c = g.at(2, 0), &d = g.at(2, 1);
  const Rational kappa2 =
      detail::checked_div((b + d - b2 - c) * (a + b - c - d), (a - c) * (b - c), "kappa_2 denominator vanishes");
  return (x1 + x2 - b2 - c) * f2_explicit(g, x1, x2) - kappa2 * (x1 - c) * (x2 - c) * (x1 + x2 - a - d);
}

// F_(2)(x_1,x_2,x_3|℧) for a 3-grid. The closed form assumes ℧(3;0) = 0; otherwise it is applied to
// ℧ - ℧(3;0) at x - ℧(3;0).
template <class X>
X f2_threevar(const Grid& g, const X& x1, const X& x2, const X& x3) {
  if (g.n() < 3) throw Error(Errc::OutOfRange, "f2_threevar needs a 3-grid");
  const Rational s = g.at(3, 0);
  const Rational a = g.at(1, 0) - s, b = g.at(1, 1) - s, c = g.at(2, 0) - s, d = g.at(2, 1) - s;
  const X y1 = x1 - s, y2 = x2 - s, y3 = x3 - s;
  const Rational den = a - c;
  const char* msg = "[1;0] = [2;0]";
  return y1 * y1 + y2 * y2 + y3 * y3 +
         detail::checked_div(a + b - c - d, den, msg) * (y1 * y2 + y1 * y3 + y2 * y3) -
         detail::checked_div(a * a + a * b - c * c - c * d, den, msg) * (y1 + y2 + y3) +
         detail::checked_div(a * a * b + a * a * c - a * c * c - c * c * d, den, msg);
}

// κ_k(℧) of the two-variable Pieri rule.
Rational pieri_kappa(const Grid& g, int k);
// (x_1+x_2-℧(1;k)-℧(2;0)) F_(k) - F_(k+1) - κ_k (x_1-℧(2;0))(x_2-℧(2;0)) F_(k-1)(·|℧¹) on ℧_2.
SymPoly pieri_residual(const Grid& g, int k);

// (℧(i;1)-℧(i+1;j-1))(℧(i;1)-℧(i+1;j+1)) - (℧(i;0)-℧(i+1;j))(℧(i;2)-℧(i+1;j))
Rational constraint_12(const Grid& g, int i, int j);
// [3;1] - ([1;0][2;1]-[1;1][2;0]-[2;1][3;0]+[1;1][3;0])/([1;0]-[2;0])
Rational constraint_31(const Grid& g);
// ([2;1]-[1;2])([2;0]-[1;0]) - ([2;1]-[1;1])([2;0]-[1;1])
Rational constraint_final(const Grid& g);

struct Classification {
  enum class Kind { QType, LinearType, NotPerfect };
  Kind kind = Kind::NotPerfect;
  // fitted generator; kind Raw when not perfect
  GridTag fitted;
  // first cell (i, j) disagreeing with the fit, row-major
  std::optional<std::pair<int, int>> violated_cell;
  // all table values distinct; a fitted table can still repeat a value (e.g. c_i - c_j ∈ dℤ)
  bool nondegenerate = false;
  std::string reason;
};

const char* classification_name(Classification::Kind k);

// Fits q = ([2;1]-[1;1])/([2;0]-[1;0]) and the matching generator from rows 1-2, columns 0-1,
// then verifies the whole table. Needs n ≥ 3 and depth ≥ 4; throws Errc::DivisionByZero if
// ℧(1;0) = ℧(2;0).
Classification classify_grid(const Grid& g);

}  // namespace sqw
