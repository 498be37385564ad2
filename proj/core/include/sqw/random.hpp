#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sqw/grid.hpp"
#include "sqw/partition.hpp"
#include "sqw/rational.hpp"
#include "sqw/report.hpp"
#include "sqw/weights.hpp"

namespace sqw {

// Seeded source of small random rationals. Draws are built from raw mt19937_64 output by
// rejection, so a seed gives the same sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // uniform on [lo, hi]
  long uniform(long lo, long hi);
  // ±p/r with 1 ≤ p ≤ max_num, 1 ≤ r ≤ max_den
  Rational nonzero_rational(long max_num = 9, long max_den = 7);

 private:
  std::mt19937_64 eng_;
};

struct DrawOptions {
  long max_num = 9;
  long max_den = 7;
  // exponents |k| ≤ window are excluded in x/y ∈ q^k
  int window = 12;
  int max_attempts = 1000;
};

// q ∉ {0, ±1}, and no two of the values v_i satisfy v_i/v_j ∈ q^ℤ within the window.
bool generic_for_q(const Rational& q, const std::vector<Rational>& values, int window);

// Parameter sets used by the identity checks. `rejections` counts discarded degenerate draws.
struct ParamDraw {
  ParamSeq A, B;
  Rational q;
  int rejections = 0;
};

// A = (a_0..a_{len-1}), B = (b_0..b_{len-1}) with every a_i, b_j pairwise q-generic.
ParamDraw draw_params(Rng& rng, size_t len, const DrawOptions& opt = {});

struct YbeDraw {
  YbeParams params;
  int rejections = 0;
};
YbeDraw draw_ybe_params(Rng& rng, const DrawOptions& opt = {});

struct GradedDraw {
  GradedPoint point;
  int rejections = 0;
};
// A, B of length len and nx, ny graded coordinates; the hats are nonzero.
GradedDraw draw_graded_point(Rng& rng, size_t len, size_t nx, size_t ny, const DrawOptions& opt = {});

struct LinearDraw {
  ParamSeq C;
  Rational d;
  int rejections = 0;
};
// d ≠ 0 and c_i - c_j ∉ dℤ for i ≠ j ≥ 1.
LinearDraw draw_linear_params(Rng& rng, size_t len, const DrawOptions& opt = {});

// Non-degenerate generated tables of rank n and the given depth.
Grid draw_q_grid(Rng& rng, int n, int depth, const DrawOptions& opt = {});
Grid draw_linear_grid(Rng& rng, int n, int depth, const DrawOptions& opt = {});

// Random point with n rational coordinates.
std::vector<Rational> draw_point(Rng& rng, size_t n, const DrawOptions& opt = {});

}  // namespace sqw
