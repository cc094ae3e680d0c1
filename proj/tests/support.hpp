#pragma once

// Shared fixtures for the test suites: knot families, table-vs-oracle sweeps
// and an exact rational reference for uniform blocks.

#include <algorithm>
#include <cmath>
#include <vector>

#include "bbspline/bbspline.hpp"

namespace bbspline::testing {

inline KnotVector<double> example13_knots() {
  return KnotVector<double>(3, 5, {0, 0, 0, 0, 3, 5, 6, 9, 10, 10, 10, 10});
}

inline KnotVector<double> example15_knots() {
  return KnotVector<double>(3, 5, {0, 0, 0, 0, 3, 3, 5, 9, 10, 10, 10, 10});
}

inline KnotVector<double> unclamped_uniform_knots() {
  return KnotVector<double>(3, 2, {-3, -2, -1, 0, 1, 2, 3, 4, 5});
}

inline KnotVector<double> bezier_knots(int m) {
  std::vector<double> t(static_cast<std::size_t>(m + 1), 0.0);
  t.resize(static_cast<std::size_t>(2 * m + 2), 1.0);
  return KnotVector<double>(m, 1, std::move(t));
}

inline int random_int(Generator& g, int lo, int hi) {
  return lo + static_cast<int>(g.uniform() * (hi - lo + 1)) % (hi - lo + 1);
}

/// Clamped, inner knot values repeated up to m times (t_n kept simple).
inline KnotVector<double> random_multiplicity_knots(Generator& g, int n, int m) {
  std::vector<double> inner{0.0};
  double t = 0.0;
  while (static_cast<int>(inner.size()) < n) {
    t += g.uniform(1.0 / 50, 1.0);
    const int mult = std::min(random_int(g, 1, m), n - static_cast<int>(inner.size()));
    for (int c = 0; c < mult; ++c) inner.push_back(t);
  }
  inner.push_back(t + g.uniform(1.0 / 50, 1.0));
  std::vector<double> knots(static_cast<std::size_t>(m), inner.front());
  knots.insert(knots.end(), inner.begin(), inner.end());
  knots.insert(knots.end(), static_cast<std::size_t>(m), inner.back());
  return KnotVector<double>(m, n, std::move(knots));
}

/// Strictly increasing knots, both ends unclamped.
inline KnotVector<double> random_unclamped_knots(Generator& g, int n, int m) {
  std::vector<double> knots{g.uniform(-1.0, 0.0)};
  for (int k = 1; k < n + 2 * m + 1; ++k) knots.push_back(knots.back() + g.uniform(1.0 / 50, 1.0));
  return KnotVector<double>(m, n, std::move(knots));
}

/// Parameters t_j + (l/50)(t_{j+1} - t_j) on non-empty spans, plus t_n.
inline std::vector<double> sweep_params(const KnotVector<double>& kv, int per_span = 50) {
  return sample_params(kv, per_span);
}

struct SweepResult {
  double max_error = 0;
  double min_entry = 0;
  double max_column_drift = 0;
  long values = 0;
};

/// Compares every basis value reconstructed from table against the divided
/// difference oracle, and records the table's sign and column-sum extremes.
inline SweepResult sweep_against_divdiff(const KnotVector<double>& kv, const BBCoeffTable<double>& table,
                                         int per_span = 50) {
  SweepResult r;
  const int m = kv.degree();
  BasisEvaluator<double> evaluator;
  BasisValues<double> basis;
  for (double u : sweep_params(kv, per_span)) {
    evaluator.evaluate(table, kv, u, basis);
    for (int i = basis.span - m; i <= basis.span; ++i) {
      r.max_error = std::max(r.max_error, std::abs(basis(i) - bspline_via_divdiff(kv, i, u)));
      ++r.values;
    }
  }
  for (int j : table.spans()) {
    for (int k = 0; k <= m; ++k) {
      double sum = 0;
      for (int i = j - m; i <= j; ++i) {
        const double b = table.coeff(j, i, k);
        r.min_entry = std::min(r.min_entry, b);
        sum += b;
      }
      r.max_column_drift = std::max(r.max_column_drift, std::abs(sum - 1));
    }
  }
  return r;
}

/// Solves A x = y exactly by Gaussian elimination (A square, nonsingular).
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> y) {
  const std::size_t n = y.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(y[p], y[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      y[r] -= f * y[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) y[c] /= a[c][c];
  return y;
}

/// Coefficient block of span [m, m+1] for the integer knots 0..2m+1,
/// obtained by exact rational collocation of the divided-difference values
/// at m+1 interior points.
inline std::vector<std::vector<Rational>> exact_uniform_block(int m) {
  std::vector<Rational> knots;
  for (int k = 0; k <= 2 * m + 1; ++k) knots.emplace_back(k);
  const KnotVector<Rational> kv(m, 1, knots);
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m + 1));
  std::vector<Rational> ts;
  for (int q = 0; q <= m; ++q) {
    const Rational t = Rational(q + 1) / Rational(m + 2);
    ts.push_back(t);
    for (int k = 0; k <= m; ++k) a[static_cast<std::size_t>(q)].push_back(bernstein_value<Rational>(m, k, t));
  }
  std::vector<std::vector<Rational>> block;
  for (int i = -m; i <= 0; ++i) {
    std::vector<Rational> y;
    for (const auto& t : ts) y.push_back(bspline_via_divdiff<Rational>(kv, i, Rational(m) + t));
    block.push_back(solve_exact(a, y));
  }
  return block;
}

}  // namespace bbspline::testing
