#include <gtest/gtest.h>

#include "printers.hpp"

#include "sqw/linalg.hpp"
#include "sqw/random.hpp"
#include "sqw/sqwhittaker.hpp"
#include "sqw/transfer.hpp"
#include "sqw/weights.hpp"

using namespace sqw;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

Composition C1(int v) { return Composition{v}; }

// Value at x of the polynomial through (xs[i], ys[i]).
Rational interpolate_at(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const Rational& x) {
  const size_t n = xs.size();
  RationalMatrix V(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) V[i][j] = xs[i].pow(static_cast<long>(j));
  const std::vector<Rational> c = solve_linear(V, ys);
  Rational v = 0;
  for (size_t j = 0; j < n; ++j) v += c[j] * x.pow(static_cast<long>(j));
  return v;
}

YbeParams draw(Rng& rng) { return draw_ybe_params(rng).params; }

}  // namespace

TEST(Phi, Examples) {
  const Rational a = R(2, 3), b = R(5, 7), q = R(3, 11);
  EXPECT_EQ(phi(C1(0), C1(0), a, b, q), R(1));
  EXPECT_EQ(phi(C1(1), C1(0), a, b, q), b * (R(1) - a) / (R(1) - a * b));
  EXPECT_EQ(phi(C1(-1), C1(2), a, b, q), R(0));
}

TEST(Weights, Examples) {
  const Rational a1 = R(2, 3), a2 = R(-5, 4), b1 = R(7, 2), b2 = R(3, 5), q = R(2, 9);
  EXPECT_EQ(weight_wa(a1, a2, b1, q, C1(0), C1(0), C1(0), C1(0)), R(1));
  EXPECT_EQ(weight_wb(a2, b1, b2, q, C1(0), C1(0), C1(0), C1(0)), R(1));
  EXPECT_EQ(weight_wa(a1, a2, b1, q, C1(1), C1(0), C1(0), C1(1)), (a2 / b1) * (R(1) - a1 / a2) / (R(1) - a1 / b1));
  EXPECT_EQ(weight_wb(a2, b1, b2, q, C1(0), C1(1), C1(0), C1(1)), (b1 / b2) * (R(1) - a2 / b1) / (R(1) - a2 / b2));
  EXPECT_EQ(weight_wb(a2, b1, b2, q, C1(1), C1(0), C1(0), C1(1)), R(0));
  EXPECT_EQ(weight_wa(a1, a2, b1, q, C1(1), C1(1), C1(0), C1(1)), R(0));
  for (RForm f : {RForm::PSum1, RForm::PSum2}) {
    EXPECT_EQ(weight_r(a1, b1, a2, b2, q, C1(0), C1(0), C1(0), C1(0), f), R(1));
    for (int K = 1; K <= 3; ++K) EXPECT_EQ(weight_r(a1, b1, a2, b2, q, C1(0), C1(0), C1(K), C1(0), f), R(0));
  }
  EXPECT_EQ(weight_r(a1, b1, a2, b2, q, C1(1), C1(1), C1(1), C1(1), RForm::PSum1),
            weight_r(a1, b1, a2, b2, q, C1(1), C1(1), C1(1), C1(1), RForm::PSum2));
}

TEST(Weights, ConservationRankTwo) {
  Rng rng(41);
  const YbeParams p = draw(rng);
  for (int i0 = 0; i0 <= 3; ++i0)
    for (int i1 = 0; i1 <= 3; ++i1)
      for (int j0 = 0; j0 <= 3; ++j0)
        for (int j1 = 0; j1 <= 3; ++j1)
          for (int k0 = 0; k0 <= 3; ++k0)
            for (int k1 = 0; k1 <= 3; ++k1) {
              const Composition I{i0, i1}, J{j0, j1}, K{k0, k1};
              // pick L to break conservation in the first coordinate
              const Composition L{i0 + j0 - k0 + 1, i1 + j1 - k1};
              if (L[0] < 0 || L[1] < 0) continue;
              EXPECT_EQ(weight_wa(p.a1, p.a2, p.b1, p.q, I, J, K, L), R(0));
              EXPECT_EQ(weight_wb(p.a2, p.b1, p.b2, p.q, I, J, K, L), R(0));
              EXPECT_EQ(weight_r(p.a1, p.b1, p.a2, p.b2, p.q, I, J, K, L, RForm::PSum1), R(0));
              EXPECT_EQ(weight_r(p.a1, p.b1, p.a2, p.b2, p.q, I, J, K, L, RForm::PSum2), R(0));
            }
}

TEST(Weights, RFormsAgreeRankTwo) {
  Rng rng(43);
  for (int pt = 0; pt < 2; ++pt) {
    const YbeParams p = draw(rng);
    for (int i0 = 0; i0 <= 2; ++i0)
      for (int i1 = 0; i1 <= 2; ++i1)
        for (int j0 = 0; j0 <= 2; ++j0)
          for (int j1 = 0; j1 <= 2; ++j1)
            for (int k0 = 0; k0 <= i0 + j0; ++k0)
              for (int k1 = 0; k1 <= i1 + j1; ++k1) {
                const Composition I{i0, i1}, J{j0, j1}, K{k0, k1}, L{i0 + j0 - k0, i1 + j1 - k1};
                EXPECT_EQ(weight_r(p.a1, p.b1, p.a2, p.b2, p.q, I, J, K, L, RForm::PSum1),
                          weight_r(p.a1, p.b1, p.a2, p.b2, p.q, I, J, K, L, RForm::PSum2));
              }
  }
}

TEST(Weights, WbIsPolynomialInB1AndWaInA2) {
  Rng rng(47);
  const YbeParams p = draw(rng);
  for (int I = 0; I <= 3; ++I)
    for (int J = 0; J <= 3; ++J)
      for (int K = 0; K <= I + J; ++K) {
        const int L = I + J - K;
        std::vector<Rational> xs, yb, ya;
        for (int s = 0; s < std::max(I, J) + 2; ++s) {
          const Rational v = R(s + 2, 3);
          xs.push_back(v);
          yb.push_back(weight_wb(p.a2, v, p.b2, p.q, C1(I), C1(J), C1(K), C1(L)));
          ya.push_back(weight_wa(p.a1, v, p.b1, p.q, C1(I), C1(J), C1(K), C1(L)));
        }
        const Rational probe = R(-7, 5);
        EXPECT_EQ(interpolate_at(xs, yb, probe), weight_wb(p.a2, probe, p.b2, p.q, C1(I), C1(J), C1(K), C1(L)));
        EXPECT_EQ(interpolate_at(xs, ya, probe), weight_wa(p.a1, probe, p.b1, p.q, C1(I), C1(J), C1(K), C1(L)));
      }
}

TEST(Weights, ScaledRMatchesRForRankOne) {
  Rng rng(53);
  const YbeParams p = draw(rng);
  for (int I = 0; I <= 3; ++I)
    for (int J = 0; J <= 3; ++J)
      for (int K = 0; K <= I + J; ++K) {
        const int L = I + J - K;
        const Rational r = weight_r(p.a1, p.b1, p.a2, p.b2, p.q, C1(I), C1(J), C1(K), C1(L), RForm::PSum1);
        EXPECT_EQ(weight_r_scaled(p.a1, p.b1, p.a2.inverse(), p.b2, p.q, long(I), long(J), long(K), long(L)),
                  r * p.a2.pow(-I));
      }
}

TEST(Ybe, ExampleBoundaries) {
  Rng rng(59);
  const YbeParams p = draw(rng);
  const YbeBoundary zero{{0}, {0}, {0}, {0}, {0}, {0}};
  EXPECT_TRUE(check_ybe_bbb(p, zero).pass);
  EXPECT_EQ(check_ybe_bbb(p, zero).lhs, R(1));
  EXPECT_TRUE(check_ybe_mixed(p, zero).pass);
  const YbeBoundary broken{{1}, {0}, {1}, {0}, {0}, {1}};
  EXPECT_TRUE(check_ybe_bbb(p, broken).pass);
  EXPECT_EQ(check_ybe_bbb(p, broken).lhs, R(0));
  EXPECT_EQ(check_ybe_mixed(p, broken).rhs, R(0));
  const YbeBoundary b101{{1}, {0}, {1}, {1}, {0}, {1}};
  EXPECT_TRUE(check_ybe_bbb(p, b101).pass);
}

TEST(Ybe, RankTwoBoundariesWithSmallLabels) {
  Rng rng(61);
  const YbeParams p = draw(rng);
  const std::vector<Composition> labels = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  long checked = 0;
  for (const auto& a1 : labels)
    for (const auto& a2 : labels)
      for (const auto& a3 : labels)
        for (const auto& b1 : labels)
          for (const auto& b2 : labels)
            for (const auto& b3 : labels) {
              if ((a1[0] + a2[0] + a3[0] != b1[0] + b2[0] + b3[0]) || (a1[1] + a2[1] + a3[1] != b1[1] + b2[1] + b3[1]))
                continue;
              if (++checked % 7) continue;
              const YbeBoundary bd{a1, a2, a3, b1, b2, b3};
              EXPECT_TRUE(check_ybe_bbb(p, bd).pass);
              EXPECT_TRUE(check_ybe_mixed(p, bd).pass);
            }
}

class TransferTest : public ::testing::Test {
 protected:
  void SetUp() override {
    Rng rng(67);
    const ParamDraw d = draw_params(rng, 10, DrawOptions{.max_num = 60, .max_den = 40});
    A = d.A;
    B = d.B;
    q = d.q;
    x = R(7, 3);
    y = R(-5, 2);
  }
  ParamSeq A, B;
  Rational q, x, y;
};

TEST_F(TransferTest, RowOperatorExamples) {
  EXPECT_EQ(tb_element(x, A, B, 0, 0, Partition{}, Partition{}, 2, q), R(1));
  EXPECT_EQ(ta_element(y, A, B, 0, 0, Partition{}, Partition{}, 2, q), R(1));
  EXPECT_EQ(tb_element(x, A, B, 1, 0, Partition{1}, Partition{}, 1, q), R(1));
  EXPECT_EQ(tb_element(x, A, B, 1, 0, Partition{1}, Partition{1}, 2, q), R(0));
  EXPECT_EQ(b_element(x, A, B, Partition{}, Partition{}, q), R(1));
  EXPECT_EQ(b_element(x, A, B, Partition{1}, Partition{}, q), (x - A.at(1)) / (B.at(0) * (R(1) - q)));
  EXPECT_EQ(b_element(x, A, B, Partition{1, 1}, Partition{}, q), R(0));
  EXPECT_EQ(b_star_element(y, A, B, Partition{}, Partition{}, q), R(1));
  EXPECT_EQ(b_star_element(y, A, B, Partition{2}, Partition{1}, q), R(0));
  EXPECT_EQ(psi(Partition{}, A, B, q), R(1));
  EXPECT_EQ(psi(Partition{1}, A, B, q), (B.at(0) / A.at(0)) * (R(1) - q) / (R(1) - A.at(1) / B.at(1)));
}

TEST_F(TransferTest, InterlacingSupport) {
  for (const Partition& lambda : enumerate_partitions(5, 5))
    for (const Partition& mu : enumerate_partitions(5, 5)) {
      const bool il = interlaces(lambda, mu);
      EXPECT_EQ(!b_element(x, A, B, lambda, mu, q).is_zero(), il) << lambda.str() << mu.str();
      EXPECT_EQ(!b_star_element(y, A, B, mu, lambda, q).is_zero(), il) << lambda.str() << mu.str();
    }
}

TEST_F(TransferTest, StabilityInRowLength) {
  for (const Partition& lambda : enumerate_partitions(3, 4))
    for (const Partition& mu : partitions_below(lambda)) {
      const int N = std::max(lambda.length(), mu.length()) + 1, I = lambda.part(1) - mu.part(1);
      EXPECT_EQ(tb_element(x, A, B, I, 0, lambda, mu, N, q), tb_element(x, A, B, I, 0, lambda, mu, N + 3, q));
      EXPECT_EQ(ta_element(y, A, B, I, 0, mu, lambda, N, q), ta_element(y, A, B, I, 0, mu, lambda, N + 3, q));
    }
}

TEST_F(TransferTest, DualityMatchesDirectEvaluation) {
  Rng rng(71);
  for (int pt = 0; pt < 5; ++pt) {
    const Rational yy = rng.nonzero_rational(60, 40);
    for (const Partition& lambda : enumerate_partitions(3, 4))
      for (const Partition& mu : partitions_below(lambda))
        EXPECT_EQ(b_star_element(yy, A, B, mu, lambda, q), b_star_element_direct(yy, A, B, mu, lambda, q))
            << lambda.str() << mu.str();
  }
}

TEST_F(TransferTest, OneVariableFormulaMatchesRowOperator) {
  for (const Partition& lambda : enumerate_partitions(5, 5))
    for (const Partition& mu : enumerate_partitions(5, 5)) {
      const Rational f = f_one_var(lambda, mu, x, A, B, q);
      EXPECT_EQ(f, b_element(x, A, B, lambda, mu, q));
      EXPECT_EQ(f, f_skew(lambda, mu, std::vector<Rational>{x}, A, B, q));
    }
}

TEST_F(TransferTest, TwoRowOperatorsCommute) {
  const std::vector<Poly> xs{Poly::variable(2, 0), Poly::variable(2, 1)};
  for (const Partition& lambda : enumerate_partitions(4, 4))
    for (const Partition& mu : enumerate_partitions(4, 4)) {
      if (!lambda.contains(mu)) continue;
      const Poly p = f_skew(lambda, mu, xs, A, B, q);
      EXPECT_EQ(p, p.swap_vars(0, 1)) << lambda.str() << "/" << mu.str();
    }
}

TEST(QGauss, Examples) {
  const Rational a = R(3, 5), b = R(-7, 2), xh = R(2, 3), yh = R(-4, 5), qh = R(5, 7);
  EXPECT_TRUE(check_qgauss(0, 0, a, b, 8, xh, yh, qh).pass);
  EXPECT_TRUE(check_qgauss(1, 0, a, b, 10, xh, yh, qh).pass);
  EXPECT_TRUE(check_qgauss(0, 2, a, b, 12, xh, yh, qh).pass);
}

TEST(Exchange, Examples) {
  Rng rng(73);
  const GradedPoint p = draw_graded_point(rng, 8, 1, 1, DrawOptions{.max_num = 60, .max_den = 40}).point;
  EXPECT_TRUE(check_exchange(Partition{}, Partition{}, 8, p).pass);
  EXPECT_TRUE(check_exchange(Partition{1}, Partition{1}, 8, p).pass);
  EXPECT_TRUE(check_exchange(Partition{2, 1}, Partition{1, 1}, 10, p).pass);
}
