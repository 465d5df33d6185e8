#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"

using namespace curvebetti;

TEST(CurveSequence, DerivedConstantsForFivePointCurve) {
  const auto c = make_curve({1, 2, 3, 7, 10});
  EXPECT_EQ(c.b, (std::vector<Int>{9, 8, 7, 3, 0}));
  EXPECT_EQ(c.d, 1);
  EXPECT_EQ(c.c, 6);
  EXPECT_EQ(c.B, 33);
  EXPECT_EQ(c.b1(), 9);
  EXPECT_EQ(c.b2(), 8);
  EXPECT_EQ(c.b_last(), 3);
  EXPECT_FALSE(c.degenerate());
}

TEST(CurveSequence, BresinskyH2Constants) {
  const auto c = make_curve({12, 15, 20, 23});
  EXPECT_EQ(c.b, (std::vector<Int>{11, 8, 3, 0}));
  EXPECT_EQ(c.d, 1);
  EXPECT_EQ(c.c, 14);
  EXPECT_EQ(c.B, 27);  // 12h + 3
}

TEST(CurveSequence, NonTrivialGcd) {
  const auto c = make_curve({1, 3, 5});
  EXPECT_EQ(c.d, 2);
  EXPECT_EQ(c.c, 0);  // <2, 1> = N
  EXPECT_EQ(shift_e(c, 1), 1);  // k = 6
  EXPECT_EQ(shift_e(c, 2), 2);  // k = 7
}

TEST(CurveSequence, TwoPointCurveIsDegenerate) {
  const auto c = make_curve({1, 2});
  EXPECT_TRUE(c.degenerate());
  EXPECT_EQ(c.d, 1);
  EXPECT_EQ(c.c, 0);
  EXPECT_EQ(c.B, 4);
}

TEST(CurveSequence, RejectsBadInput) {
  auto kind_of = [](std::initializer_list<Int> a) {
    try {
      make_curve(a);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Precondition;
  };
  EXPECT_EQ(kind_of({2, 1}), ErrorKind::InvalidSequence);
  EXPECT_EQ(kind_of({5}), ErrorKind::InvalidSequence);
  EXPECT_EQ(kind_of({0, 3}), ErrorKind::InvalidSequence);
  EXPECT_EQ(kind_of({3, 3, 4}), ErrorKind::InvalidSequence);
  EXPECT_THROW(shift_curve(make_curve({1, 2}), 0), Error);
}

TEST(Conductor, KnownValues) {
  EXPECT_EQ(conductor(std::vector<Int>{3, 5}), 8);
  EXPECT_EQ(conductor(std::vector<Int>{1}), 0);
  EXPECT_EQ(conductor(std::vector<Int>{9, 8, 7, 3}), 6);
  EXPECT_EQ(conductor(std::vector<Int>{11, 8, 3}), 14);
}

TEST(Conductor, NotCoprimeAndBadInput) {
  try {
    conductor(std::vector<Int>{4, 6});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
  }
  EXPECT_THROW(conductor(std::vector<Int>{}), Error);
  EXPECT_THROW(conductor(std::vector<Int>{3, -1}), Error);
}

TEST(ConductorProperty, MatchesBruteForceOn100RandomSets) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<Int> value(2, 30);
  int checked = 0;
  while (checked < 100) {
    std::vector<Int> gens;
    for (int i = count(rng); i > 0; --i) gens.push_back(value(rng));
    Int g = 0;
    for (Int x : gens) g = std::gcd(g, x);
    if (g != 1) {
      EXPECT_THROW(conductor(gens), Error);
      continue;
    }
    ++checked;
    EXPECT_EQ(conductor(gens), oracle::conductor(gens)) << ::testing::PrintToString(gens);

    const Int m = *std::min_element(gens.begin(), gens.end());
    const auto apery = apery_set(gens, m);
    const auto in = oracle::semigroup_elements(gens, 2000);
    ASSERT_EQ(static_cast<Int>(apery.size()), m);
    for (Int i = 0; i < m; ++i) {
      const Int w = apery[static_cast<std::size_t>(i)];
      EXPECT_EQ(w % m, i);
      EXPECT_TRUE(in[static_cast<std::size_t>(w)]);
      if (w >= m) { EXPECT_FALSE(in[static_cast<std::size_t>(w - m)]) << "not minimal in its class"; }
    }
  }
}

TEST(Represent, MinimalCoinExamples) {
  const auto c = make_curve({1, 2, 3, 7, 10});
  auto r = represent(c, 10);
  EXPECT_EQ(r.t, 0);
  EXPECT_EQ(r.v, 10);
  EXPECT_EQ(r.w, (std::vector<Int>{0, 0, 1, 1}));
  r = represent(c, 6);
  EXPECT_EQ(r.w, (std::vector<Int>{0, 0, 0, 2}));
  r = represent(c, 100);
  EXPECT_EQ(r.t * 9 + r.v, 100);
  EXPECT_GE(r.v, 6);
  EXPECT_LT(r.v, 15);
  EXPECT_THROW(represent(c, 5), Error);
}

TEST(RepresentProperty, WindowAndMinimalityOnRandomCurves) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = oracle::random_sequence(rng, 3 + trial % 3, 25);
    const auto c = make_curve(a);
    for (Int u = c.dc(); u < c.dc() + 4 * c.b1(); u += c.d) {
      const auto rep = represent(c, u);
      Int v = 0;
      for (std::size_t i = 0; i < rep.w.size(); ++i) v += rep.w[i] * c.b[i];
      EXPECT_EQ(v, rep.v);
      EXPECT_EQ(rep.t * c.b1() + rep.v, u);
      EXPECT_GE(rep.v, c.dc());
      EXPECT_LT(rep.v, c.dc() + c.b1());
      if (rep.v != 0) { EXPECT_LT(rep.t * c.b1(), u); }
      // no representation of v with fewer coins
      const int coins = static_cast<int>(c.n()) - 1;
      for (Int fewer = 0; fewer < rep.weight(); ++fewer)
        oracle::compositions(coins, fewer, [&](const std::vector<Int>& w) {
          Int s = 0;
          for (int i = 0; i < coins; ++i) s += w[static_cast<std::size_t>(i)] * c.b[static_cast<std::size_t>(i)];
          EXPECT_NE(s, rep.v);
        });
    }
  }
}

TEST(BoundN, Examples) {
  EXPECT_EQ(bound_N(make_curve({1, 2, 3, 7, 10}), 4), 2736);
  EXPECT_EQ(bound_N(make_curve({12, 15, 20, 23}), 8), 3110);
  EXPECT_THROW(bound_N(make_curve({1, 2}), -1), Error);
}
