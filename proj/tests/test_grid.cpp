#include <gtest/gtest.h>

#include "printers.hpp"

#include "sqw/degenerations.hpp"
#include "sqw/error.hpp"
#include "sqw/grid.hpp"
#include "sqw/random.hpp"

using namespace sqw;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

const DrawOptions kWide{.max_num = 60, .max_den = 40};

Grid sample_q() { return Grid::q_type(R(1, 3), R(2, 5), {R(3), R(-7, 2), R(5, 11)}, 8); }
Grid sample_lin() { return Grid::linear_type(R(3, 2), {R(0), R(1, 3), R(-5, 7)}, 8); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc{};
}

Grid random_raw(Rng& rng, int n, int depth) {
  for (;;) {
    std::vector<std::vector<Rational>> v(static_cast<size_t>(n));
    for (auto& row : v)
      for (int j = 0; j <= depth; ++j) row.push_back(rng.nonzero_rational(40, 30));
    Grid g(std::move(v));
    if (grid_nondegenerate(g)) return g;
  }
}

}  // namespace

TEST(Grid, Nondegeneracy) {
  EXPECT_TRUE(grid_nondegenerate(sample_q()));
  EXPECT_TRUE(grid_nondegenerate(sample_lin()));
  Grid g = sample_q();
  g.set(2, 0, g.at(1, 0));
  EXPECT_FALSE(grid_nondegenerate(g));
  // 1 + 2*4 collides with the third row
  EXPECT_FALSE(grid_nondegenerate(Grid::linear_type(R(2), {R(1), R(4), R(9)}, 4)));
}

TEST(Grid, Operations) {
  const Grid g = sample_q();
  EXPECT_EQ(grid_shift(g, 0), g);
  const Grid l = grid_restrict(grid_leftshift(g, 1), 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 0; j <= g.depth(); ++j) EXPECT_EQ(l.at(i, j), g.at(i + 1, j));
  EXPECT_EQ(grid_shift(g, 3), Grid::q_type(R(1, 3), R(2, 5), {R(3), R(-7, 2), R(5, 11) * R(2, 5).pow(3)}, 5));
  EXPECT_EQ(grid_shift(sample_lin(), 2), Grid::linear_type(R(3, 2), {R(0), R(1, 3), R(-5, 7) + R(3)}, 6));
  EXPECT_EQ(grid_translate(sample_q(), R(2)), Grid::q_type(R(7, 3), R(2, 5), {R(3), R(-7, 2), R(5, 11)}, 8));
}

TEST(Grid, HookValues) {
  const Grid g = sample_q();
  EXPECT_EQ(hook_value(g, Partition{}), R(1));
  EXPECT_EQ(hook_value(grid_restrict(g, 1), Partition{1}), g.at(1, 1) - g.at(1, 0));
  EXPECT_EQ(hook_value(grid_restrict(g, 2), Partition{1, 1}), (g.at(1, 0) - g.at(2, 0)) * (g.at(2, 1) - g.at(2, 0)));
  EXPECT_EQ(hook_value(grid_restrict(g, 2), Partition{2}),
            (g.at(1, 2) - g.at(1, 0)) * (g.at(1, 2) - g.at(1, 1)));
}

TEST(Grid, SolveExamples) {
  const Grid g1 = grid_restrict(sample_q(), 1);
  EXPECT_EQ(solve_f(g1, Partition{1}).to_poly(), Poly::variable(1, 0) - g1.at(1, 0));
  const Grid g2 = grid_restrict(sample_lin(), 2);
  const SymPoly f2 = solve_f(g2, Partition{2});
  EXPECT_EQ(f2.evaluate(std::vector<Rational>{g2.at(1, 2), g2.at(2, 0)}), hook_value(g2, Partition{2}));
  EXPECT_EQ(f2.to_poly(), f2_explicit(g2, Poly::variable(2, 0), Poly::variable(2, 1)));
}

TEST(Grid, SmallExplicitCasesVanishOnPerfectGrids) {
  for (const Grid& g : {sample_q(), sample_lin()}) {
    EXPECT_TRUE(f3_explicit(g, g.at(1, 0), g.at(2, 2)).is_zero());
    const Grid h = grid_restrict(g, 2);
    EXPECT_EQ(solve_f(h, Partition{3}).to_poly(), f3_explicit(h, Poly::variable(2, 0), Poly::variable(2, 1)));
  }
  // a q-type grid with ℧(3;0) = 0
  const Grid g = Grid::q_type(R(-2), R(3, 4), {R(5), R(-1, 3), R(2)}, 4);
  ASSERT_TRUE(g.at(3, 0).is_zero());
  const std::vector<Rational> p = g.point(Partition{1, 1, 1});
  EXPECT_TRUE(f2_threevar(g, p[0], p[1], p[2]).is_zero());
  EXPECT_EQ(solve_f(g, Partition{2}).to_poly(),
            f2_threevar(g, Poly::variable(3, 0), Poly::variable(3, 1), Poly::variable(3, 2)));
}

TEST(Grid, RestrictionSetsTrailingVariables) {
  const Grid g = sample_lin();
  for (const Partition& lambda : enumerate_partitions(2, 3)) {
    const Poly full = solve_f(g, lambda).to_poly().substitute(2, g.at(3, 0));
    EXPECT_EQ(full, solve_f(grid_restrict(g, 2), lambda).to_poly()) << lambda.str();
  }
}

TEST(Grid, VanishingBeyondDefiningRange) {
  for (const Grid& g : {sample_q(), sample_lin()}) {
    const Grid h = grid_restrict(g, 2);
    for (const Partition& lambda : enumerate_partitions(2, 4)) {
      const SymPoly f = solve_f(h, lambda);
      for (const Partition& mu : enumerate_partitions(2, lambda.weight() + 2)) {
        if (mu.contains(lambda)) continue;
        EXPECT_TRUE(f.evaluate(h.point(mu)).is_zero()) << lambda.str() << " at " << mu.str();
      }
    }
  }
}

TEST(Grid, SolverMatchesDegenerateFamilies) {
  const ParamSeq A({R(0), R(3), R(-7, 2), R(5, 11)}, 'A'), C({R(0), R(0), R(1, 3), R(-5, 7)}, 'C');
  const Rational q = R(2, 5), d = R(3, 2);
  const Grid gq = Grid::q_type(R(0), q, {R(3), R(-7, 2)}, 6), gl = Grid::linear_type(d, {R(0), R(1, 3)}, 6);
  for (const Partition& lambda : enumerate_partitions(2, 3)) {
    const SymPoly ft = f_tilde_symbolic(lambda, Partition{}, 2, A, q);
    EXPECT_EQ(solve_f(gq, lambda) * h_tilde(lambda, A, q, 2), ft * hook_value(gq, lambda)) << lambda.str();
    const SymPoly fe = f_el_symbolic(lambda, Partition{}, 2, C, d);
    EXPECT_EQ(solve_f(gl, lambda) * h_el(lambda, C, d, 2), fe * hook_value(gl, lambda)) << lambda.str();
  }
}

TEST(Grid, PieriOnFamilies) {
  for (const Grid& g : {sample_q(), sample_lin()})
    for (int k = 1; k <= 4; ++k) EXPECT_TRUE(pieri_residual(g, k).is_zero()) << k;
  EXPECT_TRUE(pieri_kappa(sample_lin(), 2).is_zero());
}

TEST(Grid, LowPieriCasesHoldOnEveryNondegenerateTwoGrid) {
  Rng rng(211);
  for (int trial = 0; trial < 5; ++trial) {
    const Grid g = random_raw(rng, 2, 5);
    EXPECT_TRUE(pieri_residual(g, 1).is_zero());
    EXPECT_TRUE(pieri_residual(g, 2).is_zero());
    EXPECT_FALSE(pieri_residual(g, 3).is_zero());
  }
  Grid p = grid_restrict(sample_q(), 2);
  p.set(1, 2, p.at(1, 2) + R(1));
  EXPECT_TRUE(pieri_residual(p, 2).is_zero());
  EXPECT_FALSE(pieri_residual(p, 3).is_zero());
}

TEST(Grid, Constraints) {
  for (const Grid& g : {sample_q(), sample_lin()}) {
    EXPECT_TRUE(constraint_12(g, 1, 2).is_zero());
    EXPECT_TRUE(constraint_31(g).is_zero());
    EXPECT_TRUE(constraint_final(g).is_zero());
  }
  Grid p = sample_q();
  p.set(1, 2, p.at(1, 2) + R(1));
  EXPECT_FALSE(constraint_final(p).is_zero());
}

TEST(Grid, Classification) {
  const Classification cq = classify_grid(sample_q());
  EXPECT_EQ(cq.kind, Classification::Kind::QType);
  EXPECT_EQ(cq.fitted.q, R(2, 5));
  EXPECT_EQ(cq.fitted.c, R(1, 3));
  EXPECT_EQ(cq.fitted.a, (std::vector<Rational>{R(3), R(-7, 2), R(5, 11)}));
  const Classification cl = classify_grid(sample_lin());
  EXPECT_EQ(cl.kind, Classification::Kind::LinearType);
  EXPECT_EQ(cl.fitted.d, R(3, 2));
  Grid p = sample_lin();
  p.set(2, 3, p.at(2, 3) + R(1, 9));
  const Classification cp = classify_grid(p);
  EXPECT_EQ(cp.kind, Classification::Kind::NotPerfect);
  EXPECT_TRUE(cp.violated_cell.has_value());
  EXPECT_STREQ(classification_name(cp.kind), "NotPerfect");
}

TEST(Grid, RandomGeneratedGridsClassify) {
  Rng rng(223);
  for (int i = 0; i < 3; ++i) {
    const Grid gq = draw_q_grid(rng, 3, 4, kWide);
    EXPECT_EQ(classify_grid(gq).fitted, gq.tag());
    const Grid gl = draw_linear_grid(rng, 3, 4, kWide);
    EXPECT_EQ(classify_grid(gl).fitted, gl.tag());
  }
}

TEST(Grid, Errors) {
  const Grid g = grid_restrict(sample_q(), 2);
  EXPECT_EQ(code_of([&] { solve_f(grid_restrict(Grid::q_type(R(0), R(2), {R(1), R(3)}, 2), 2), Partition{3}); }),
            Errc::DepthTooShallow);
  Grid bad = g;
  bad.set(2, 0, bad.at(1, 0));
  EXPECT_EQ(code_of([&] { f2_explicit(bad, R(1), R(2)); }), Errc::DivisionByZero);
  Grid bad3 = sample_q();
  bad3.set(2, 0, bad3.at(1, 0));
  EXPECT_EQ(code_of([&] { constraint_31(bad3); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([&] { g.at(3, 0); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([&] { pieri_residual(g, 0); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([&] { classify_grid(g); }), Errc::OutOfRange);
}
