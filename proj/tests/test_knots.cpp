#include <gtest/gtest.h>

#include "support.hpp"

using namespace bbspline;
using namespace bbspline::testing;

TEST(KnotVector, IndexingWithOffset) {
  const auto kv = example13_knots();
  EXPECT_EQ(kv.degree(), 3);
  EXPECT_EQ(kv.n(), 5);
  EXPECT_EQ(kv.basis_count(), 8);
  EXPECT_EQ(kv[-3], 0.0);
  EXPECT_EQ(kv[1], 3.0);
  EXPECT_EQ(kv[4], 9.0);
  EXPECT_EQ(kv[8], 10.0);
  EXPECT_EQ(kv.domain_begin(), 0.0);
  EXPECT_EQ(kv.domain_end(), 10.0);
}

TEST(KnotVector, ConstructorRejectsBadShape) {
  EXPECT_THROW(KnotVector<double>(0, 1, {0, 1}), std::invalid_argument);
  EXPECT_THROW(KnotVector<double>(1, 0, {0, 1}), std::invalid_argument);
  EXPECT_THROW(KnotVector<double>(2, 1, {0, 0, 1, 1}), std::invalid_argument);
}

TEST(Validate, AcceptsExampleKnots) {
  EXPECT_FALSE(validate(example13_knots()).has_value());
  EXPECT_FALSE(validate(example15_knots()).has_value());
  EXPECT_FALSE(validate(unclamped_uniform_knots()).has_value());
}

TEST(Validate, ReportsViolations) {
  const auto degenerate = validate(KnotVector<double>(1, 1, {2, 2, 2, 2}));
  ASSERT_TRUE(degenerate.has_value());
  EXPECT_EQ(degenerate->kind, KnotViolationKind::degenerate_domain);
  EXPECT_NE(degenerate->message.find("degenerate domain"), std::string::npos);

  const auto mult = validate(KnotVector<double>(3, 5, {0, 0, 0, 0, 3, 3, 3, 3, 10, 10, 10, 10}));
  ASSERT_TRUE(mult.has_value());
  EXPECT_EQ(mult->kind, KnotViolationKind::inner_multiplicity);
  EXPECT_NE(mult->message.find("inner multiplicity"), std::string::npos);

  const auto order = validate(KnotVector<double>(1, 2, {0, 0, 2, 1, 3}));
  ASSERT_TRUE(order.has_value());
  EXPECT_EQ(order->kind, KnotViolationKind::not_nondecreasing);
  EXPECT_EQ(order->index, 2);

  EXPECT_THROW(require_valid(KnotVector<double>(1, 1, {2, 2, 2, 2})), std::invalid_argument);
}

TEST(Validate, InnerKnotMergedWithBoundaryRunCounts) {
  // t_1 equals t_0, so the run 0,0,0,0 at the start holds an inner knot four times.
  const KnotVector<double> kv(2, 3, {0, 0, 0, 0, 1, 2, 2, 2});
  const auto v = validate(kv);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, KnotViolationKind::inner_multiplicity);
}

TEST(FindSpan, HalfOpenSpansAndEndConvention) {
  const auto kv = example13_knots();
  EXPECT_EQ(find_span(kv, 4.0), 1);
  EXPECT_EQ(find_span(kv, 10.0), 4);
  EXPECT_EQ(find_span(kv, 0.0), 0);
  EXPECT_EQ(find_span(kv, 3.0), 1);
  EXPECT_EQ(find_span(kv, 2.999), 0);
  EXPECT_THROW(find_span(kv, -0.1), std::domain_error);
  EXPECT_THROW(find_span(kv, 10.1), std::domain_error);
}

TEST(FindSpan, SkipsEmptySpans) {
  const auto kv = example15_knots();
  EXPECT_EQ(find_span(kv, 3.0), 2);
  EXPECT_EQ(find_span(kv, 2.0), 0);
}

TEST(IsClamped, Examples) {
  EXPECT_EQ(is_clamped(example13_knots()), (Clamping{true, true}));
  EXPECT_EQ(is_clamped(unclamped_uniform_knots()), (Clamping{false, false}));
  EXPECT_EQ(is_clamped(bezier_knots(3)), (Clamping{true, true}));
}

TEST(Neighbors, Examples) {
  EXPECT_EQ(right_neighbor(example15_knots(), 1), 3);
  EXPECT_EQ(right_neighbor(example13_knots(), 1), 2);
  EXPECT_EQ(right_neighbor(example13_knots(), 0), 1);
  EXPECT_EQ(left_neighbor(example15_knots(), 3), 2);
  EXPECT_EQ(left_neighbor(example13_knots(), 5), 4);
  EXPECT_EQ(left_neighbor(example13_knots(), 1), 0);
}

TEST(NonemptySpans, Examples) {
  EXPECT_EQ(nonempty_spans(example13_knots()), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(nonempty_spans(example15_knots()), (std::vector<int>{0, 2, 3, 4}));
  EXPECT_EQ(nonempty_spans(bezier_knots(3)), (std::vector<int>{0}));
}

TEST(InflateEnd, UnclampedUniformExample) {
  const auto inflated = inflate_end(unclamped_uniform_knots());
  EXPECT_EQ(inflated.original_n, 2);
  EXPECT_EQ(inflated.knots.n(), 5);
  EXPECT_EQ(inflated.knots.knots(), (std::vector<double>{-3, -2, -1, 0, 1, 2, 3, 4, 5, 5, 5, 5}));
  EXPECT_TRUE(is_clamped(inflated.knots).end);
}

TEST(InflateEnd, NoOpWhenClamped) {
  const auto kv = example13_knots();
  const auto inflated = inflate_end(kv);
  EXPECT_EQ(inflated.knots, kv);
  EXPECT_EQ(inflated.original_n, kv.n());
  const KnotVector<double> quad(2, 2, {0, 0, 0, 1, 2, 2, 2});
  EXPECT_EQ(inflate_end(quad).knots, quad);
}

TEST(InflateEnd, PartiallyClampedEnd) {
  const KnotVector<double> kv(3, 2, {0, 0, 0, 0, 1, 2, 2, 3, 3});
  const auto inflated = inflate_end(kv);
  EXPECT_EQ(inflated.knots.n(), 4);
  EXPECT_TRUE(is_clamped(inflated.knots).end);
  for (int i = -3; i <= 5; ++i) EXPECT_EQ(inflated.knots[i], kv[i]);
}
