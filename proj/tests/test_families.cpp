#include <gtest/gtest.h>

#include "printers.hpp"

#include "sqw/degenerations.hpp"
#include "sqw/linalg.hpp"
#include "sqw/random.hpp"
#include "sqw/sqwhittaker.hpp"

using namespace sqw;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

const DrawOptions kWide{.max_num = 60, .max_den = 40};

// complete homogeneous h_k in n variables
SymPoly complete(int n, int k) {
  if (k < 0) return SymPoly(n);
  SymPoly h(n);
  for (const Partition& mu : enumerate_partitions(n, k))
    if (mu.weight() == k) h = h + SymPoly::monomial(n, mu);
  return h;
}

// s_λ = det(h_{λ_i - i + j}), at most three rows
SymPoly schur(const Partition& lambda, int n) {
  const int l = lambda.length();
  auto h = [&](int i, int j) { return complete(n, lambda.part(i) - i + j); };
  if (l == 0) return SymPoly(n, R(1));
  if (l == 1) return h(1, 1);
  if (l == 2) return h(1, 1) * h(2, 2) - h(1, 2) * h(2, 1);
  if (l == 3)
    return h(1, 1) * (h(2, 2) * h(3, 3) - h(2, 3) * h(3, 2)) - h(1, 2) * (h(2, 1) * h(3, 3) - h(2, 3) * h(3, 1)) +
           h(1, 3) * (h(2, 1) * h(3, 2) - h(2, 2) * h(3, 1));
  ADD_FAILURE() << "schur helper covers three rows";
  return SymPoly(n);
}

Rational factorial_of_gaps(const Partition& lambda) {
  Rational f = 1;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int k = 2; k <= lambda.part(r) - lambda.part(r + 1); ++k) f *= Rational(k);
  return f;
}

class Families : public ::testing::Test {
 protected:
  void SetUp() override {
    Rng rng(101);
    const ParamDraw d = draw_params(rng, 12, kWide);
    A = d.A;
    B = d.B;
    q = d.q;
    const LinearDraw ld = draw_linear_params(rng, 12, kWide);
    C = ld.C;
    dd = ld.d;
  }
  ParamSeq A, B, C;
  Rational q, dd;
};

}  // namespace

TEST_F(Families, SpinWhittakerExamples) {
  const Rational x = R(5, 3);
  EXPECT_EQ(f_one_var(Partition{}, Partition{}, x, A, B, q), R(1));
  EXPECT_EQ(f_one_var(Partition{1}, Partition{}, x, A, B, q), (x - A.at(1)) / (B.at(0) * (R(1) - q)));
  EXPECT_EQ(f_skew(Partition{}, Partition{}, std::vector<Rational>{x, R(2)}, A, B, q), R(1));
  EXPECT_EQ(f_skew(Partition{3}, Partition{1}, std::vector<Rational>{x}, A, B, q),
            f_one_var(Partition{3}, Partition{1}, x, A, B, q));
  EXPECT_EQ(f_dual(Partition{}, Partition{}, std::vector<Rational>{x}, A, B, q), R(1));
  EXPECT_EQ(f_dual(Partition{1}, Partition{}, std::vector<Rational>{x}, A, B, q),
            psi(Partition{1}, A, B, q) * f_skew(Partition{1}, Partition{}, std::vector<Rational>{x}, A, B, q));
  EXPECT_EQ(g_basis(Partition{}, std::vector<Rational>{x}, A, B, q), R(1));
  EXPECT_EQ(g_basis(Partition{1}, std::vector<Rational>{x}, A, B, q),
            (R(1) - x / B.at(1)) / (R(1) - A.at(1) / B.at(1)));
  EXPECT_EQ(h_value(Partition{}, A, B, 2, q), R(1));
  EXPECT_EQ(h_value(Partition{1}, A, B, 1, q), -A.at(1) / B.at(0));
}

TEST_F(Families, SymbolicPolynomialsAreSymmetric) {
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lambda : enumerate_partitions(n, 5)) {
      const SymPoly f = f_skew_symbolic(lambda, Partition{}, n, A, B, q);
      EXPECT_EQ(f.total_degree(), n * lambda.part(1));
      Rng rng(static_cast<std::uint64_t>(lambda.weight() * 10 + n));
      const std::vector<Rational> pt = draw_point(rng, static_cast<size_t>(n));
      EXPECT_EQ(f.evaluate(pt), f_skew(lambda, Partition{}, pt, A, B, q));
    }
}

TEST_F(Families, VanishingExamples) {
  const VanishingTable t1 = vanishing_report(1, 3, A, B, q);
  EXPECT_TRUE(t1.pass);
  // rows λ, columns μ: (2) at (1) vanishes, (1) at (1) is H
  EXPECT_EQ(t1.values[2][1], R(0));
  EXPECT_EQ(t1.values[1][1], -A.at(1) / B.at(0));
  for (size_t m = 0; m < t1.partitions.size(); ++m) EXPECT_EQ(t1.values[0][m], R(1));
  EXPECT_TRUE(vanishing_report(2, 4, A, B, q).pass);
}

TEST_F(Families, EvaluationMatrixIsABasis) {
  const VanishingTable t = vanishing_report(2, 4, A, B, q);
  EXPECT_EQ(matrix_rank(t.values), static_cast<int>(t.partitions.size()));
  for (size_t l = 0; l < t.partitions.size(); ++l) EXPECT_EQ(t.values[l][l], t.h[l]);
}

TEST_F(Families, TransitionFromGBasis) {
  Rng rng(103);
  const TransitionReport r = gf_transition(2, 3, A, B, q, {draw_point(rng, 2), draw_point(rng, 2)});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.coeff[0][0], R(1));
}

TEST(Cauchy, ExamplesAndConstantTerm) {
  Rng rng(107);
  for (auto [n, m, D] : {std::tuple{1, 1, 6}, std::tuple{2, 2, 8}}) {
    const GradedPoint p = draw_graded_point(rng, 16, static_cast<size_t>(n), static_cast<size_t>(m), kWide).point;
    const SeriesReport r = check_cauchy(n, m, D, p);
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.contributing.empty());
    // t^0 term: only λ = ∅ survives on the left and the prefactor ∏(a_i/b_j;q)_∞^{-1} is not graded
    Rational c0 = 1;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= m; ++j) c0 /= R(1) - p.A.at(static_cast<size_t>(i)) / p.B.at(static_cast<size_t>(j));
    EXPECT_EQ(r.lhs[0], c0);
    EXPECT_EQ(r.rhs[0], c0);
  }
}

TEST(Cauchy, SkewWithSmallShapes) {
  Rng rng(109);
  const GradedPoint p = draw_graded_point(rng, 16, 1, 1, kWide).point;
  for (const Partition& mu : {Partition{}, Partition{1}})
    for (const Partition& nu : {Partition{}, Partition{1}}) {
      const SeriesReport r = check_cauchy(1, 1, 5, p, mu, nu);
      EXPECT_TRUE(r.pass) << mu.str() << nu.str();
    }
}

TEST_F(Families, DegenerateFamilyExamples) {
  const Rational x = R(4, 7);
  EXPECT_EQ(f_tilde(Partition{}, Partition{}, std::vector<Rational>{x}, A, q), R(1));
  EXPECT_EQ(f_tilde(Partition{1}, Partition{}, std::vector<Rational>{x}, A, q), (x - A.at(1)) / (R(1) - q));
  EXPECT_EQ(h_tilde(Partition{}, A, q, 2), R(1));
  EXPECT_EQ(h_tilde(Partition{1}, A, q, 1), -A.at(1));
  EXPECT_EQ(f_el(Partition{1}, Partition{}, std::vector<Rational>{x}, C, dd), x - C.at(1));
  EXPECT_EQ(f_el(Partition{}, Partition{}, std::vector<Rational>{x}, C, dd), R(1));
  EXPECT_EQ(h_el(Partition{}, C, dd, 2), R(1));
  EXPECT_EQ(h_el(Partition{1}, C, dd, 1), dd);
  EXPECT_EQ(h_tilde(Partition{1, 1}, A, q, 2),
            f_tilde(Partition{1, 1}, Partition{}, grid_point_q(A, q, Partition{1, 1}, 2), A, q));
  EXPECT_EQ(h_el(Partition{2, 1}, C, dd, 2),
            f_el(Partition{2, 1}, Partition{}, grid_point_lin(C, dd, Partition{2, 1}, 2), C, dd));
}

TEST_F(Families, DegenerateVanishing) {
  for (int n = 1; n <= 3; ++n) {
    const auto parts = enumerate_partitions(n, 4);
    for (const Partition& mu : parts)
      for (const Partition& lambda : parts) {
        const bool inside = mu.contains(lambda);
        EXPECT_EQ(f_tilde(lambda, Partition{}, grid_point_q(A, q, mu, n), A, q).is_zero(), !inside);
        EXPECT_EQ(f_el(lambda, Partition{}, grid_point_lin(C, dd, mu, n), C, dd).is_zero(), !inside);
      }
  }
}

TEST_F(Families, InfiniteBLimitRecoversTilde) {
  // b_r^{-1} = u β_r with u graded; the coefficient of u^{|λ|-|μ|} after dividing out β is F̃.
  const std::vector<Rational> beta = {R(2, 3), R(-5, 4), R(7, 2), R(3, 5), R(-1, 6), R(9, 7), R(4, 11)};
  const Rational x = R(-3, 8);
  for (const Partition& lambda : enumerate_partitions(3, 4))
    for (const Partition& mu : partitions_below(lambda)) {
      const int k = lambda.weight() - mu.weight(), D = k + 1;
      const TruncSeries qs(q, D), xs(x, D);
      const TruncSeries f = f_one_var_with(
          lambda, mu, xs, [&](int r) { return TruncSeries(A.at(static_cast<size_t>(r)), D); },
          [&](int r) { return TruncSeries::variable(D, beta[static_cast<size_t>(r)]); }, qs);
      Rational scale = 1;
      for (int r = 1; r <= lambda.length(); ++r) scale *= beta[static_cast<size_t>(r - 1)].pow(lambda.part(r) - mu.part(r));
      EXPECT_EQ(f.valuation() >= k, true);
      EXPECT_EQ(f[k] / scale, f_tilde_one_var(lambda, mu, x, A, q)) << lambda.str() << "/" << mu.str();
    }
}

TEST_F(Families, ElementaryLimitRegime) {
  const std::vector<Rational> rs = {R(1, 2), R(-2, 3), R(5, 4)};
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lambda : enumerate_partitions(n, 3)) {
      const std::vector<Rational> r(rs.begin(), rs.begin() + n);
      const TruncSeries s = f_tilde_eps_scaled(lambda, Partition{}, r, C, dd, lambda.weight() + 2);
      EXPECT_EQ(s[0] * (-dd).pow(lambda.part(1)), f_el(lambda, Partition{}, r, C, dd)) << lambda.str();
    }
}

TEST(QWhittakerOracle, SchurAtQZero) {
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lambda : enumerate_partitions(n, 5)) {
      EXPECT_EQ(q_whittaker_p(lambda, n, R(0)), schur(lambda, n)) << lambda.str();
      EXPECT_EQ(q_whittaker_q(lambda, n, R(0)), schur(lambda, n)) << lambda.str();
    }
}

TEST(QWhittakerOracle, ElementaryAtQOne) {
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lambda : enumerate_partitions(n, 5))
      EXPECT_EQ(q_whittaker_p(lambda, n, R(1)), SymPoly::elementary(n, lambda.conjugate())) << lambda.str();
}

TEST(QWhittakerOracle, QIsBTimesP) {
  for (const Rational& q : {R(2, 3), R(-5, 2), R(7)})
    for (int n = 1; n <= 3; ++n)
      for (const Partition& lambda : enumerate_partitions(n, 5))
        EXPECT_EQ(q_whittaker_q(lambda, n, q), q_whittaker_p(lambda, n, q) * q_whittaker_b(lambda, q));
}

TEST_F(Families, TopOfTildeIsQNormalizedWhittaker) {
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lambda : enumerate_partitions(n, 4)) {
      const SymPoly top = sympoly_top_component(f_tilde_symbolic(lambda, Partition{}, n, A, q));
      EXPECT_EQ(top, q_whittaker_q(lambda, n, q)) << lambda.str();
      EXPECT_EQ(top == q_whittaker_p(lambda, n, q), q_whittaker_b(lambda, q) == R(1)) << lambda.str();
    }
}

TEST_F(Families, TopOfElementaryFamilyIsScaledElementary) {
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lambda : enumerate_partitions(n, 5)) {
      const SymPoly top = sympoly_top_component(f_el_symbolic(lambda, Partition{}, n, C, dd));
      const SymPoly e = SymPoly::elementary(n, lambda.conjugate());
      EXPECT_EQ(top * factorial_of_gaps(lambda), e) << lambda.str();
    }
}
