#include <gtest/gtest.h>

#include "printers.hpp"

#include "io.hpp"
#include "sqw/error.hpp"
#include "sqw/random.hpp"

using namespace sqw;
using namespace sqw::cli;

TEST(CliIo, ParsePartition) {
  EXPECT_EQ(parse_partition("2,1"), (Partition{2, 1}));
  EXPECT_EQ(parse_partition("(3,1,1)"), (Partition{3, 1, 1}));
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_THROW(parse_partition("1,2"), Error);
  EXPECT_THROW(parse_partition("a"), Error);
}

TEST(CliIo, ParseRationals) {
  EXPECT_EQ(parse_rationals("1/2,-3"), (std::vector<Rational>{Rational(1, 2), Rational(-3)}));
  EXPECT_THROW(parse_rationals("1/0"), Error);
}

TEST(CliIo, GridRoundTrip) {
  for (const Grid& g : {Grid::q_type(Rational(1), Rational(2), {Rational(3), Rational(5, 7)}, 3),
                        Grid::linear_type(Rational(-1, 2), {Rational(0), Rational(4)}, 2)}) {
    const Json j = to_json(g);
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(grid_from_json(j), g);
    EXPECT_EQ(grid_from_json(Json::parse(j.dump())), g);
  }
}

TEST(CliIo, ParamsFile) {
  const ParamFile p = params_from_json(Json::parse(R"({"A":["0","1/2"],"q":"2/3"})"));
  ASSERT_TRUE(p.A && p.q);
  EXPECT_EQ((*p.A)[1], Rational(1, 2));
  EXPECT_EQ(*p.q, Rational(2, 3));
  EXPECT_FALSE(p.B.has_value());
}

TEST(CliIo, CsvRows) {
  const Json j = Json::parse(R"({"a":1,"b":["x","y"]})");
  const std::string csv = to_csv(j);
  EXPECT_NE(csv.find("a,1"), std::string::npos);
  EXPECT_NE(csv.find("y"), std::string::npos);
}

TEST(Random, DeterministicForAFixedSeed) {
  Rng a(99), b(99);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.nonzero_rational(), b.nonzero_rational());
  Rng c(5), d(5);
  const ParamDraw pc = draw_params(c, 8), pd = draw_params(d, 8);
  for (size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(pc.A.at(i), pd.A.at(i));
    EXPECT_EQ(pc.B.at(i), pd.B.at(i));
  }
  EXPECT_EQ(pc.q, pd.q);
}

TEST(Random, DrawsAreGeneric) {
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    const Rational r = rng.nonzero_rational(5, 3);
    EXPECT_FALSE(r.is_zero());
    EXPECT_LE(r.den(), 3);
  }
  const ParamDraw p = draw_params(rng, 6);
  EXPECT_TRUE(generic_for_q(p.q, {p.A.at(1), p.B.at(1)}, 12));
}
