#pragma once

// Tensor-product surface evaluation with one coefficient table per axis.
//
// S(u, w) over the cell (j1, j2) is sum_i sum_l p_i(u) q_l(w) W_{i,l} with
// i = j1-m1..j1 and l = j2-m2..j2.  A grid evaluates each axis basis vector
// once per sample and then combines, so the axis work is O(N1 + N2).

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bbspline/bbf.hpp"
#include "bbspline/curve.hpp"
#include "bbspline/geometry.hpp"

namespace bbspline {

template <class T>
using AxisTables = std::pair<BBCoeffTable<T>, BBCoeffTable<T>>;

template <class T>
AxisTables<T> surface_tables(const TensorProductSurface<T>& s) {
  return {compute_table(s.knots_u()), compute_table(s.knots_v())};
}

/// out = sum_i p_i sum_l q_l W_{i,l}, l innermost.  Shared by the point and
/// grid paths so both produce identical bits.
template <class T>
void combine(const TensorProductSurface<T>& s, const BasisValues<T>& bu, const BasisValues<T>& bv, std::span<T> out,
             std::span<T> row) {
  const int m1 = s.knots_u().degree();
  const int m2 = s.knots_v().degree();
  const int d = s.dim();
  for (int c = 0; c < d; ++c) out[static_cast<std::size_t>(c)] = T(0);
  for (int r1 = 0; r1 <= m1; ++r1) {
    const int i = bu.span - m1 + r1;
    for (int c = 0; c < d; ++c) row[static_cast<std::size_t>(c)] = T(0);
    for (int r2 = 0; r2 <= m2; ++r2) {
      const T q = bv.values[static_cast<std::size_t>(r2)];
      const auto w = s.control(i, bv.span - m2 + r2);
      for (int c = 0; c < d; ++c) row[static_cast<std::size_t>(c)] += q * w[static_cast<std::size_t>(c)];
    }
    const T p = bu.values[static_cast<std::size_t>(r1)];
    for (int c = 0; c < d; ++c) out[static_cast<std::size_t>(c)] += p * row[static_cast<std::size_t>(c)];
  }
}

template <class T>
std::vector<T> surface_point(const TensorProductSurface<T>& s, const AxisTables<T>& tables, const T& u, const T& w) {
  const auto bu = basis_values(tables.first, s.knots_u(), u);
  const auto bv = basis_values(tables.second, s.knots_v(), w);
  std::vector<T> out(static_cast<std::size_t>(s.dim()));
  std::vector<T> row(static_cast<std::size_t>(s.dim()));
  combine(s, bu, bv, std::span<T>(out), std::span<T>(row));
  return out;
}

/// N1 x N2 points; point(a, b) is S(samplesU[a], samplesV[b]).
template <class T>
struct SurfaceGrid {
  int rows = 0;
  int cols = 0;
  int dim = 0;
  std::vector<T> data;
  /// Axis basis vectors computed while building the grid.
  std::int64_t basis_evaluations = 0;

  std::span<const T> point(int a, int b) const {
    return {data.data() + index(a, b), static_cast<std::size_t>(dim)};
  }
  std::span<T> point(int a, int b) { return {data.data() + index(a, b), static_cast<std::size_t>(dim)}; }

 private:
  std::size_t index(int a, int b) const {
    return (static_cast<std::size_t>(a) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(b)) *
           static_cast<std::size_t>(dim);
  }
};

template <class T>
SurfaceGrid<T> surface_grid(const TensorProductSurface<T>& s, const AxisTables<T>& tables,
                            std::span<const T> samplesU, std::span<const T> samplesV) {
  SurfaceGrid<T> grid;
  grid.rows = static_cast<int>(samplesU.size());
  grid.cols = static_cast<int>(samplesV.size());
  grid.dim = s.dim();
  grid.data.resize(samplesU.size() * samplesV.size() * static_cast<std::size_t>(grid.dim));

  BasisEvaluator<T> evaluator;
  std::vector<BasisValues<T>> bu(samplesU.size());
  std::vector<BasisValues<T>> bv(samplesV.size());
  for (std::size_t a = 0; a < samplesU.size(); ++a) evaluator.evaluate(tables.first, s.knots_u(), samplesU[a], bu[a]);
  for (std::size_t b = 0; b < samplesV.size(); ++b) evaluator.evaluate(tables.second, s.knots_v(), samplesV[b], bv[b]);
  grid.basis_evaluations = static_cast<std::int64_t>(samplesU.size() + samplesV.size());

  std::vector<T> row(static_cast<std::size_t>(grid.dim));
  for (int a = 0; a < grid.rows; ++a)
    for (int b = 0; b < grid.cols; ++b)
      combine(s, bu[static_cast<std::size_t>(a)], bv[static_cast<std::size_t>(b)], grid.point(a, b),
              std::span<T>(row));
  return grid;
}

/// Builds both axis tables, then the grid.
template <class T>
SurfaceGrid<T> surface_grid(const TensorProductSurface<T>& s, std::span<const T> samplesU,
                            std::span<const T> samplesV) {
  return surface_grid(s, surface_tables(s), samplesU, samplesV);
}

/// Bezier net of the patch over cell (j1, j2): (m1+1) x (m2+1) points,
/// row-major in k1, each d coordinates.
template <class T>
std::vector<T> patch_to_bezier(const TensorProductSurface<T>& s, const AxisTables<T>& tables, int j1, int j2) {
  if (!tables.first.has_span(j1) || !tables.second.has_span(j2))
    throw std::domain_error("patch_to_bezier: span is empty");
  const int m1 = s.knots_u().degree();
  const int m2 = s.knots_v().degree();
  const int d = s.dim();
  std::vector<T> net(static_cast<std::size_t>((m1 + 1) * (m2 + 1) * d), T(0));
  for (int i = j1 - m1; i <= j1; ++i) {
    const auto bu = tables.first.row(j1, i);
    for (int l = j2 - m2; l <= j2; ++l) {
      const auto bv = tables.second.row(j2, l);
      const auto w = s.control(i, l);
      for (int k1 = 0; k1 <= m1; ++k1) {
        for (int k2 = 0; k2 <= m2; ++k2) {
          const T c = bu[static_cast<std::size_t>(k1)] * bv[static_cast<std::size_t>(k2)];
          T* v = net.data() + (k1 * (m2 + 1) + k2) * d;
          for (int x = 0; x < d; ++x) v[x] += c * w[static_cast<std::size_t>(x)];
        }
      }
    }
  }
  return net;
}

}  // namespace bbspline
