#include <gtest/gtest.h>

#include "support.hpp"

using namespace bbspline;
using namespace bbspline::testing;

TEST(Uniform, LinearHatFunctions) {
  const auto t = compute_table_uniform(1);
  EXPECT_EQ(t.rows, (std::vector<std::vector<Rational>>{{1, 0}, {0, 1}}));
}

TEST(Uniform, QuadraticBlock) {
  const auto t = compute_table_uniform(2);
  const Rational h(1, 2);
  EXPECT_EQ(t.rows, (std::vector<std::vector<Rational>>{{h, 0, 0}, {h, 1, h}, {0, 0, h}}));
}

TEST(Uniform, CubicMatchesExactOracle) {
  EXPECT_EQ(compute_table_uniform(3).rows, exact_uniform_block(3));
}

TEST(Uniform, MatchesExactOracleUpToDegreeEight) {
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(compute_table_uniform(m).rows, exact_uniform_block(m)) << "m=" << m;
}

TEST(Uniform, ColumnsSumToExactlyOne) {
  for (int m = 1; m <= 12; ++m) {
    const auto t = compute_table_uniform(m);
    for (int k = 0; k <= m; ++k) {
      Rational s(0);
      for (const auto& row : t.rows) {
        EXPECT_GE(row[static_cast<std::size_t>(k)], 0);
        s += row[static_cast<std::size_t>(k)];
      }
      EXPECT_EQ(s, 1) << "m=" << m << " k=" << k;
    }
  }
}

TEST(Uniform, OuterRowsAreInverseFactorial) {
  Rational f(1);
  for (int m = 1; m <= 10; ++m) {
    f /= m;
    const auto t = compute_table_uniform(m);
    EXPECT_EQ(t.rows.front().front(), f);
    EXPECT_EQ(t.rows.back().back(), f);
  }
}

TEST(Uniform, AgreesWithFloatingTableOnUniformKnots) {
  for (int m = 1; m <= 8; ++m) {
    std::vector<double> knots;
    for (int k = 0; k <= 2 * m + 4; ++k) knots.push_back(k);
    const auto table = compute_table(KnotVector<double>(m, 4, knots));
    const auto exact = compute_table_uniform(m);
    for (int j = 0; j < 4; ++j)
      for (int r = 0; r <= m; ++r)
        for (int k = 0; k <= m; ++k)
          EXPECT_NEAR(table.coeff(j, j - m + r, k),
                      static_cast<double>(exact.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]), 1e-13);
  }
}
