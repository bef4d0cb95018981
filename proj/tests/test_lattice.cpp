#include <random>

#include "iwahori/lattice.hpp"
#include "test_util.hpp"

using namespace iwahori;

TEST(Rational, FormatAndParse) {
  EXPECT_EQ(format_rational(Rational(1, 2)), "1/2");
  EXPECT_EQ(format_rational(Rational(-4, 2)), "-2");
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_ERROR_CODE(parse_rational("1/0"), ErrorCode::Parse);
  EXPECT_ERROR_CODE(parse_rational("x"), ErrorCode::Parse);
}

TEST(Rational, MixedComparisonsTerminate) {
  Rational half(1, 2);
  EXPECT_FALSE(half == 0);
  EXPECT_TRUE(Rational(0) == 0);
  EXPECT_TRUE(Rational(4, 2) == 2);
  EXPECT_TRUE(2 == Rational(2));
  EXPECT_TRUE(half != 1);
}

TEST(Rational, Integrality) {
  EXPECT_TRUE(is_integral(to_rational({1, -2})));
  EXPECT_FALSE(is_integral(qv({"1/2", "0"})));
  EXPECT_EQ(to_integral(qv({"4/2", "-3"})), (IntVector{2, -3}));
  EXPECT_ERROR_CODE(to_integral(qv({"1/3"})), ErrorCode::Precondition);
}

TEST(IntMatrix, DeterminantAndInverse) {
  IntMatrix m = IntMatrix::from_rows({{2, 1}, {1, 1}}, 2);
  EXPECT_EQ(determinant(m), 1);
  auto inv = unimodular_inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_TRUE((m * *inv).is_identity());
  EXPECT_FALSE(unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}}, 2)));
  EXPECT_EQ(determinant(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}, 3)), -3);
}

TEST(SmithForm, RandomMatricesFactorCorrectly) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
    SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.U * a * s.V, s.D);
    EXPECT_TRUE((s.U * s.U_inv).is_identity());
    EXPECT_EQ(std::abs(determinant(s.V)), 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(s.D(i, j), 0);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      EXPECT_GE(s.diagonal[i], 0);
      if (s.diagonal[i] != 0)
        EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
      else
        EXPECT_EQ(s.diagonal[i + 1], 0);
    }
  }
}

TEST(LatticeQuotient, FreeAndTorsionParts) {
  LatticeQuotient q(2, {{1, -1}});
  EXPECT_EQ(q.free_rank(), 1u);
  EXPECT_EQ(q.reduce({1, 0}), q.reduce({0, 1}));
  EXPECT_NE(q.reduce({1, 0}), q.reduce({0, 0}));
  EXPECT_TRUE(q.contains({3, -3}));

  LatticeQuotient t(1, {{2}});
  EXPECT_EQ(t.moduli(), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(t.reduce({3}), t.reduce({1}));
  EXPECT_EQ(t.add(t.reduce({1}), t.reduce({1})), t.reduce({0}));
  EXPECT_EQ(t.reduce(t.lift(t.reduce({5}))), t.reduce({5}));

  LatticeQuotient all(2, {{1, 0}, {0, 1}});
  EXPECT_TRUE(all.is_trivial());
}

TEST(Lattice, SolveAndRank) {
  auto x = solve_in_columns({{1, -1, 0}, {0, 1, -1}}, to_rational({1, 0, -1}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, to_rational({1, 1}));
  EXPECT_FALSE(solve_in_columns({{1, -1, 0}}, to_rational({1, 0, 0})));
  EXPECT_EQ(rank_of({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank_of({{1, 0}, {0, 1}}), 2u);
}
