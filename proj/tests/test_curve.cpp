#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace bbspline;
using namespace bbspline::testing;

namespace {

BSplineCurve<double> random_curve(const KnotVector<double>& kv, int d, std::uint64_t seed) {
  Generator g(seed);
  std::vector<double> w(static_cast<std::size_t>(kv.basis_count() * d));
  for (auto& x : w) x = g.uniform(-1.0, 1.0);
  return BSplineCurve<double>(kv, d, w);
}

void expect_close(std::span<const double> a, std::span<const double> b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  double scale = 1;
  for (double x : b) scale = std::max(scale, std::abs(x));
  for (std::size_t c = 0; c < a.size(); ++c) EXPECT_NEAR(a[c], b[c], tol * scale);
}

}  // namespace

TEST(BasisValues, ClampedStart) {
  const auto kv = example13_knots();
  const auto b = basis_values(compute_table(kv), kv, 0.0);
  EXPECT_EQ(b.span, 0);
  EXPECT_EQ(b.values, (std::vector<double>{1, 0, 0, 0}));
}

TEST(BasisValues, ClampedEndUsesLastColumn) {
  const auto kv = example13_knots();
  const auto b = basis_values(compute_table(kv), kv, 10.0);
  EXPECT_EQ(b.span, 4);
  EXPECT_EQ(b.values, (std::vector<double>{0, 0, 0, 1}));
}

TEST(BasisValues, MatchRecurrenceAndSumToOne) {
  const auto kv = example13_knots();
  const auto table = compute_table(kv);
  const auto b = basis_values(table, kv, 4.0);
  EXPECT_EQ(b.span, 1);
  for (int i = -2; i <= 1; ++i) EXPECT_NEAR(b(i), bspline_via_recurrence(kv, i, 4.0), 1e-11);
  for (double u : sample_params(kv, 30)) {
    const auto v = basis_values(table, kv, u);
    double s = 0;
    for (double x : v.values) {
      EXPECT_GE(x, -1e-12);
      s += x;
    }
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(BasisValues, OutOfDomainThrows) {
  const auto kv = example13_knots();
  const auto table = compute_table(kv);
  EXPECT_THROW(basis_values(table, kv, 10.5), std::domain_error);
}

TEST(CurvePoint, EndpointsInterpolate) {
  const auto kv = example13_knots();
  const auto curve = random_curve(kv, 3, 1);
  const auto table = compute_table(kv);
  expect_close(curve_point(curve, table, 0.0), curve.control(-3), 0);
  expect_close(curve_point(curve, table, 10.0), curve.control(4), 0);
}

TEST(CurvePoint, ConstantControlPoints) {
  const auto kv = example15_knots();
  const BSplineCurve<double> curve(kv, 2, [] {
    std::vector<double> v;
    for (int i = 0; i < 8; ++i) v.insert(v.end(), {0.3, 0.6});
    return v;
  }());
  const auto table = compute_table(kv);
  for (double u : {0.0, 2.9, 3.0, 7.5, 10.0}) expect_close(curve_point(curve, table, u), std::vector<double>{0.3, 0.6}, 1e-15);
}

TEST(CurvePoint, MatchesDeBoorCoxOnRandomCurve) {
  Generator g(51);
  const auto kv = random_multiplicity_knots(g, 15, 5);
  const auto curve = random_curve(kv, 3, 52);
  const auto table = compute_table(kv);
  for (int c = 0; c < 100; ++c) {
    const double u = g.uniform(kv[0], kv[kv.n()]);
    expect_close(curve_point(curve, table, u), de_boor_cox_point(curve, u), 1e-12);
  }
}

TEST(CurvePoint, Locality) {
  const auto kv = example13_knots();
  auto curve = random_curve(kv, 1, 53);
  const auto table = compute_table(kv);
  // W_0 influences only (t_0, t_4) = (0, 9).
  const std::vector<double> inside{1.0, 4.5, 8.9}, outside{9.0, 9.5, 10.0};
  std::vector<double> before_in, before_out;
  for (double u : inside) before_in.push_back(curve_point(curve, table, u)[0]);
  for (double u : outside) before_out.push_back(curve_point(curve, table, u)[0]);
  curve.control(0)[0] += 0.5;
  for (std::size_t q = 0; q < inside.size(); ++q) EXPECT_NE(curve_point(curve, table, inside[q])[0], before_in[q]);
  for (std::size_t q = 0; q < outside.size(); ++q) EXPECT_EQ(curve_point(curve, table, outside[q])[0], before_out[q]);
}

TEST(MultiCurvePoints, MatchesDeBoorCoxForSeveralCurves) {
  Generator g(54);
  const auto kv = random_clamped_knots<double>(g, 10, 4, 1.0 / 50, 1.0);
  const std::vector<BSplineCurve<double>> curves{random_curve(kv, 2, 55), random_curve(kv, 2, 56),
                                                 random_curve(kv, 2, 57)};
  std::vector<double> params;
  for (int p = 0; p < 50; ++p) params.push_back(g.uniform(kv[0], kv[kv.n()]));
  const auto grid = multi_curve_points<double>(curves, params);
  EXPECT_EQ(grid.params, 50);
  EXPECT_EQ(grid.curves, 3);
  for (int p = 0; p < 50; ++p)
    for (int c = 0; c < 3; ++c)
      expect_close(grid.point(p, c), de_boor_cox_point(curves[static_cast<std::size_t>(c)], params[static_cast<std::size_t>(p)]), 1e-12);
}

TEST(MultiCurvePoints, SingleCurveReducesToCurvePoint) {
  const auto kv = example13_knots();
  const std::vector<BSplineCurve<double>> curves{random_curve(kv, 2, 58)};
  const std::vector<double> params{0.0, 3.3, 9.0, 10.0};
  const auto grid = multi_curve_points<double>(curves, params);
  const auto table = compute_table(kv);
  for (std::size_t p = 0; p < params.size(); ++p) {
    const auto want = curve_point(curves[0], table, params[p]);
    const auto got = grid.point(static_cast<int>(p), 0);
    EXPECT_EQ(std::vector<double>(got.begin(), got.end()), want);
  }
}

TEST(MultiCurvePoints, RejectsMismatchedKnots) {
  const std::vector<BSplineCurve<double>> curves{random_curve(example13_knots(), 2, 1),
                                                 random_curve(example15_knots(), 2, 2)};
  const std::vector<double> params{1.0};
  EXPECT_THROW(multi_curve_points<double>(curves, params), std::domain_error);
}

TEST(MultiCurvePoints, EvaluationDivisionsAreLinearInDegree) {
  std::vector<long> divs;
  for (int m = 3; m <= 5; ++m) {
    ExperimentConfig cfg;
    cfg.n = 10;
    cfg.m = m;
    cfg.M = 2;
    const auto ops = measure_new_method_ops(cfg);
    divs.push_back(static_cast<long>(ops.evaluation.divs));
    // (m+2) per parameter except at t_n, where the last column is read directly.
    EXPECT_EQ(ops.evaluation.divs, static_cast<std::uint64_t>(500 * (m + 2) + 1));
  }
  EXPECT_EQ(divs[2] - 2 * divs[1] + divs[0], 0);
}

TEST(SpanToBezier, IdentityForBezierKnots) {
  const auto kv = bezier_knots(3);
  const auto curve = random_curve(kv, 2, 61);
  const auto v = span_to_bezier(curve, compute_table(kv), 0);
  EXPECT_EQ(v, curve.control_data());
}

TEST(SpanToBezier, ReproducesCurveOnSpan) {
  Generator g(62);
  const auto kv = random_multiplicity_knots(g, 12, 4);
  const auto curve = random_curve(kv, 2, 63);
  const auto table = compute_table(kv);
  for (int j : table.spans()) {
    const auto v = span_to_bezier(curve, table, j);
    for (int s = 0; s < 20; ++s) {
      const double t = s / 20.0;
      const double u = kv[j] + t * (kv[j + 1] - kv[j]);
      const auto p = curve_point(curve, table, u);
      for (int c = 0; c < 2; ++c) {
        std::vector<double> coord;
        for (int k = 0; k <= 4; ++k) coord.push_back(v[static_cast<std::size_t>(k * 2 + c)]);
        EXPECT_NEAR(de_casteljau_eval<double>(coord, t), p[static_cast<std::size_t>(c)], 1e-12);
      }
    }
  }
}

TEST(SpanToBezier, ConstantCurveAndEmptySpan) {
  const auto kv = example15_knots();
  const BSplineCurve<double> curve(kv, 1, std::vector<double>(8, 0.4));
  const auto table = compute_table(kv);
  for (double x : span_to_bezier(curve, table, 3)) EXPECT_NEAR(x, 0.4, 1e-15);
  EXPECT_THROW(span_to_bezier(curve, table, 1), std::domain_error);
}

TEST(BSplineCurve, RejectsBadControlPoints) {
  const auto kv = example13_knots();
  EXPECT_THROW(BSplineCurve<double>(kv, 2, std::vector<double>(15)), std::invalid_argument);
  EXPECT_THROW(BSplineCurve<double>(kv, 0, std::vector<double>{}), std::invalid_argument);
  std::vector<double> w(16, 0.0);
  w[3] = std::nan("");
  EXPECT_THROW(BSplineCurve<double>(kv, 2, w), std::invalid_argument);
}
