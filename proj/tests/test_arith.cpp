#include <gtest/gtest.h>

#include "printers.hpp"

#include "sqw/error.hpp"
#include "sqw/linalg.hpp"
#include "sqw/qkit.hpp"
#include "sqw/random.hpp"
#include "sqw/rational.hpp"
#include "sqw/series.hpp"

using namespace sqw;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

TruncSeries S(std::vector<Rational> c, int order) { return TruncSeries::from_coeffs(std::move(c), order); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/7"), R(3, 7));
  EXPECT_EQ(Rational::parse(" -6/4 "), R(-3, 2));
  EXPECT_EQ(Rational::parse("5"), R(5));
  EXPECT_EQ(R(-3, 2).str(), "-3/2");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(Rational, DivisionByZeroThrows) {
  try {
    (void)(R(1) / R(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
  EXPECT_THROW(R(0).inverse(), Error);
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = rng.nonzero_rational(), b = rng.nonzero_rational(), c = rng.nonzero_rational();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * a.inverse(), R(1));
    EXPECT_EQ(a + (-a), R(0));
  }
}

TEST(Rational, Pow) {
  EXPECT_EQ(R(2, 3).pow(3), R(8, 27));
  EXPECT_EQ(R(2, 3).pow(-2), R(9, 4));
  EXPECT_EQ(R(5).pow(0), R(1));
}

TEST(Series, InverseExamples) {
  EXPECT_EQ(series_inv(TruncSeries(R(1), 4)), TruncSeries(R(1), 4));
  EXPECT_EQ(series_inv(S({R(1), R(-1)}, 3)), S({R(1), R(1), R(1), R(1)}, 3));
  EXPECT_EQ(series_inv(S({R(2), R(1)}, 2)), S({R(1, 2), R(-1, 4), R(1, 8)}, 2));
  EXPECT_THROW(series_inv(TruncSeries::variable(3)), Error);
}

TEST(Series, InverseRoundTripRandom) {
  Rng rng(5);
  for (int D = 0; D <= 32; D += 4) {
    std::vector<Rational> c;
    for (int k = 0; k <= D; ++k) c.push_back(rng.nonzero_rational());
    const TruncSeries a = S(c, D);
    EXPECT_EQ(a * series_inv(a), TruncSeries(R(1), D));
  }
}

TEST(Series, MixedOrdersTruncateToSmaller) {
  const TruncSeries a = S({R(1), R(1), R(1)}, 2), b = S({R(1), R(1)}, 1);
  EXPECT_EQ((a * b).order(), 1);
}

TEST(QKit, PochhammerExamples) {
  EXPECT_EQ(q_pochhammer(R(7, 3), R(2), 0), R(1));
  EXPECT_EQ(q_pochhammer(R(2), R(3), 2), R(5));
  EXPECT_EQ(q_pochhammer(R(2), R(3), -1), R(3));
}

TEST(QKit, PochhammerSplitsAcrossSigns) {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational x = rng.nonzero_rational(), q = rng.nonzero_rational();
    if (!generic_for_q(q, {x}, 10)) continue;
    for (long n = -4; n <= 4; ++n)
      for (long m = -4; m <= 4; ++m)
        EXPECT_EQ(q_pochhammer(x, q, n + m), q_pochhammer(x, q, n) * q_pochhammer(x * q.pow(n), q, m))
            << "n=" << n << " m=" << m;
  }
}

TEST(QKit, InfiniteProductExamples) {
  const TruncSeries t = TruncSeries::variable(2);
  EXPECT_EQ(q_pochhammer_inf(TruncSeries(R(0), 2), t, 2), TruncSeries(R(1), 2));
  EXPECT_EQ(q_pochhammer_inf(t, t, 2), S({R(1), R(-1), R(-1)}, 2));
  EXPECT_EQ(q_pochhammer_inf(TruncSeries(R(2), 1), TruncSeries::variable(1), 1), S({R(-1), R(2)}, 1));
}

TEST(QKit, InfiniteProductMatchesLongFiniteProduct) {
  const int D = 7;
  const TruncSeries q = TruncSeries::variable(D, R(3, 2));
  const TruncSeries x = S({R(2, 5), R(-1)}, D);
  EXPECT_EQ(q_pochhammer_inf(x, q, D), q_pochhammer(x, q, D + 3));
}

TEST(QKit, MultinomialRatioExamples) {
  EXPECT_EQ(q_multinomial_ratio(2, {1, 1}, R(2)), R(3));
  EXPECT_EQ(q_multinomial_ratio(4, {4, 0}, R(5, 7)), R(1));
  EXPECT_EQ(q_multinomial_ratio(1, {2, -1}, R(3)), R(0));
  EXPECT_THROW(q_multinomial_ratio(-2, {-1, -1}, R(3)), Error);
}

TEST(QKit, GaussianBinomialHasNonnegativeIntegerCoefficients) {
  for (long J = 0; J <= 6; ++J)
    for (long L = 0; L <= J; ++L) {
      // expand as a polynomial in q through series in t with q = t
      const int D = static_cast<int>(L * (J - L)) + 1;
      const TruncSeries p = q_multinomial_ratio(J, {L, J - L}, TruncSeries::variable(D));
      for (const Rational& c : p.coeffs()) {
        EXPECT_EQ(c.den(), 1);
        EXPECT_GE(c.sign(), 0);
      }
      EXPECT_EQ(p.coeffs().back(), R(0));
      Rational sum = 0;
      for (const Rational& c : p.coeffs()) sum += c;
      EXPECT_EQ(sum, q_binomial(J, L, R(1)));
    }
}

TEST(Linalg, SolvesAndDetectsSingular) {
  const RationalMatrix M = {{R(2), R(1)}, {R(1), R(3)}};
  const std::vector<Rational> x = solve_linear(M, std::vector<Rational>{R(3), R(5)});
  EXPECT_EQ(x[0], R(4, 5));
  EXPECT_EQ(x[1], R(7, 5));
  EXPECT_EQ(matrix_rank(M), 2);
  const RationalMatrix S2 = {{R(1), R(2)}, {R(2), R(4)}};
  EXPECT_EQ(matrix_rank(S2), 1);
  try {
    solve_linear(S2, std::vector<Rational>{R(1), R(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularSystem);
  }
}

TEST(Linalg, RandomSystemsRoundTrip) {
  Rng rng(17);
  for (int n = 1; n <= 6; ++n) {
    RationalMatrix M(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    std::vector<Rational> x(static_cast<size_t>(n));
    for (auto& row : M)
      for (auto& v : row) v = Rational(rng.uniform(-5, 5), rng.uniform(1, 4));
    for (auto& v : x) v = rng.nonzero_rational();
    if (matrix_rank(M) < n) continue;
    std::vector<Rational> b(static_cast<size_t>(n));
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) b[i] += M[i][j] * x[j];
    EXPECT_EQ(solve_linear(M, b), x);
  }
}
