#pragma once

// Curve evaluation from the coefficient table.
//
// On span j the m+1 active basis values are polynomials in Bernstein form, so
// each costs O(m) with the geometric evaluator, and the evaluator's weights
// are shared by all m+1 of them.  A point is then one convex combination of
// m+1 control points.  Basis values do not depend on control points, so many
// curves sharing a knot vector reuse them.

#include <span>
#include <stdexcept>
#include <vector>

#include "bbspline/bbf.hpp"
#include "bbspline/bernstein.hpp"
#include "bbspline/geometry.hpp"
#include "bbspline/knots.hpp"

namespace bbspline {

/// Reusable workspace for basis values from a coefficient table.
template <class T>
class BasisEvaluator {
 public:
  void evaluate(const BBCoeffTable<T>& table, const KnotVector<T>& kv, const T& u, BasisValues<T>& out) {
    const int m = kv.degree();
    const int j = find_span(kv, u);
    const T t = (u - kv[j]) / (kv[j + 1] - kv[j]);
    weights_.reset(m, t);
    out.span = j;
    out.values.resize(static_cast<std::size_t>(m + 1));
    for (int r = 0; r <= m; ++r) out.values[static_cast<std::size_t>(r)] = weights_.apply(table.row(j, j - m + r));
  }

 private:
  GeometricWeights<T> weights_;
};

/// p_i(u) = N_{m,i}(u) for the m+1 functions active at u.
template <class T>
BasisValues<T> basis_values(const BBCoeffTable<T>& table, const KnotVector<T>& kv, const T& u) {
  BasisValues<T> out;
  BasisEvaluator<T>().evaluate(table, kv, u, out);
  return out;
}

/// out = sum_i p_i W_i over the active control points.
template <class T>
void combine(const BSplineCurve<T>& curve, const BasisValues<T>& basis, std::span<T> out) {
  const int m = curve.degree();
  const int d = curve.dim();
  for (int c = 0; c < d; ++c) out[static_cast<std::size_t>(c)] = T(0);
  for (int r = 0; r <= m; ++r) {
    const T p = basis.values[static_cast<std::size_t>(r)];
    const auto w = curve.control(basis.span - m + r);
    for (int c = 0; c < d; ++c) out[static_cast<std::size_t>(c)] += p * w[static_cast<std::size_t>(c)];
  }
}

template <class T>
std::vector<T> curve_point(const BSplineCurve<T>& curve, const BBCoeffTable<T>& table, const T& u) {
  std::vector<T> out(static_cast<std::size_t>(curve.dim()));
  combine(curve, basis_values(table, curve.knots(), u), std::span<T>(out));
  return out;
}

/// N x M points of dimension d, parameter-major: point(p, c) is curve c at
/// parameter p.
template <class T>
struct PointGrid {
  int params = 0;
  int curves = 0;
  int dim = 0;
  std::vector<T> data;

  std::span<const T> point(int p, int c) const {
    return {data.data() + index(p, c), static_cast<std::size_t>(dim)};
  }
  std::span<T> point(int p, int c) { return {data.data() + index(p, c), static_cast<std::size_t>(dim)}; }

 private:
  std::size_t index(int p, int c) const {
    return (static_cast<std::size_t>(p) * static_cast<std::size_t>(curves) + static_cast<std::size_t>(c)) *
           static_cast<std::size_t>(dim);
  }
};

namespace detail {
template <class T>
void check_shared_knots(std::span<const BSplineCurve<T>> curves) {
  if (curves.empty()) throw std::invalid_argument("multi_curve_points: no curves");
  for (const auto& c : curves) {
    if (!(c.knots() == curves[0].knots()))
      throw std::domain_error("multi_curve_points: curves must share one knot vector");
    if (c.dim() != curves[0].dim()) throw std::domain_error("multi_curve_points: curves must share dimension");
  }
}
}  // namespace detail

/// Evaluates every curve at every parameter with a prebuilt table.
template <class T>
PointGrid<T> multi_curve_points(const BBCoeffTable<T>& table, std::span<const BSplineCurve<T>> curves,
                                std::span<const T> params) {
  detail::check_shared_knots(curves);
  const auto& kv = curves[0].knots();
  PointGrid<T> grid;
  grid.params = static_cast<int>(params.size());
  grid.curves = static_cast<int>(curves.size());
  grid.dim = curves[0].dim();
  grid.data.resize(params.size() * curves.size() * static_cast<std::size_t>(grid.dim));
  BasisEvaluator<T> evaluator;
  BasisValues<T> basis;
  for (int p = 0; p < grid.params; ++p) {
    evaluator.evaluate(table, kv, params[static_cast<std::size_t>(p)], basis);
    for (int c = 0; c < grid.curves; ++c) combine(curves[static_cast<std::size_t>(c)], basis, grid.point(p, c));
  }
  return grid;
}

/// Builds the table once, then evaluates every curve at every parameter.
template <class T>
PointGrid<T> multi_curve_points(std::span<const BSplineCurve<T>> curves, std::span<const T> params) {
  detail::check_shared_knots(curves);
  const auto table = compute_table(curves[0].knots());
  return multi_curve_points(table, curves, params);
}

/// Bezier control points V_k = sum_i b_k^{(i,j)} W_i of the curve piece over
/// span j, as (m+1) consecutive d-vectors.
template <class T>
std::vector<T> span_to_bezier(const BSplineCurve<T>& curve, const BBCoeffTable<T>& table, int j) {
  if (!table.has_span(j)) throw std::domain_error("span_to_bezier: span is empty");
  const int m = curve.degree();
  const int d = curve.dim();
  std::vector<T> v(static_cast<std::size_t>((m + 1) * d), T(0));
  for (int i = j - m; i <= j; ++i) {
    const auto row = table.row(j, i);
    const auto w = curve.control(i);
    for (int k = 0; k <= m; ++k)
      for (int c = 0; c < d; ++c)
        v[static_cast<std::size_t>(k * d + c)] += row[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(c)];
  }
  return v;
}

}  // namespace bbspline
