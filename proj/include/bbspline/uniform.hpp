#pragma once

// Uniform knots: every span carries the same coefficient block, so one
// reference span suffices, and all its entries are rational numbers that can
// be computed exactly.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bbspline {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficient block of one span for uniform knots of degree m.
/// rows[r][k] = b_k^{(j-m+r, j)}.
struct RationalBBTable {
  int m = 0;
  std::vector<std::vector<Rational>> rows;
};

/// Exact uniform-knot block.  Outer rows are 1/m! at their single non-zero
/// position.  Interior rows use the integer-coefficient form of the
/// differential recurrence with s = j - i:
///   (s+1) b_k - s b_{k+1} = (s-m-1) b'_k + (m+2-s) b'_{k+1},
/// where b' is the row of N_{m,i+1}.  Shift invariance gives the seed
/// b_0^{(i,j)} = N_{m,i}(t_j^+) = N_{m,i+1}(t_{j+1}^-) = b'_m, after which the
/// relation is solved forward for b_{k+1}.
inline RationalBBTable compute_table_uniform(int m) {
  RationalBBTable table;
  table.m = m;
  table.rows.assign(static_cast<std::size_t>(m + 1), std::vector<Rational>(static_cast<std::size_t>(m + 1), Rational(0)));

  Rational factorial(1);
  for (int k = 2; k <= m; ++k) factorial *= k;
  const Rational outer = Rational(1) / factorial;
  table.rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)] = outer;
  table.rows[0][0] = outer;

  for (int r = m - 1; r >= 1; --r) {
    const int s = m - r;
    auto& row = table.rows[static_cast<std::size_t>(r)];
    const auto& next = table.rows[static_cast<std::size_t>(r + 1)];
    row[0] = next[static_cast<std::size_t>(m)];
    for (int k = 0; k < m; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      row[ku + 1] = (Rational(s + 1) * row[ku] + Rational(m + 1 - s) * next[ku] -
                     Rational(m + 2 - s) * next[ku + 1]) /
                    Rational(s);
    }
  }
  return table;
}

}  // namespace bbspline
