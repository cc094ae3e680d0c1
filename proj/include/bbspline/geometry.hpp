#pragma once

// Curves and tensor-product surfaces: knot vectors plus control points in E^d.
// Points are dense coordinate arrays; the dimension d is a runtime value.

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "bbspline/knots.hpp"
#include "bbspline/opcount.hpp"

namespace bbspline {

namespace detail {
template <class T>
bool all_finite(const std::vector<T>& v) {
  if constexpr (std::is_floating_point_v<decltype(raw(std::declval<T>()))>) {
    for (const auto& x : v)
      if (!std::isfinite(raw(x))) return false;
  }
  return true;
}
}  // namespace detail

/// S(u) = sum_{i=-m}^{n-1} N_{m,i}(u) W_i.
template <class T>
class BSplineCurve {
 public:
  BSplineCurve() = default;
  /// control holds W_{-m}, ..., W_{n-1}, each as d consecutive coordinates.
  BSplineCurve(KnotVector<T> knots, int dim, std::vector<T> control)
      : kv_(std::move(knots)), d_(dim), w_(std::move(control)) {
    if (d_ < 1) throw std::invalid_argument("BSplineCurve: dimension must be >= 1");
    if (w_.size() != static_cast<std::size_t>(kv_.basis_count() * d_))
      throw std::invalid_argument("BSplineCurve: expected n+m control points");
    if (!detail::all_finite(w_)) throw std::invalid_argument("BSplineCurve: non-finite control coordinate");
  }

  const KnotVector<T>& knots() const { return kv_; }
  int degree() const { return kv_.degree(); }
  int dim() const { return d_; }

  /// W_i for -m <= i <= n-1.
  std::span<const T> control(int i) const {
    return {w_.data() + index(i), static_cast<std::size_t>(d_)};
  }
  std::span<T> control(int i) { return {w_.data() + index(i), static_cast<std::size_t>(d_)}; }
  const std::vector<T>& control_data() const { return w_; }

 private:
  std::size_t index(int i) const { return static_cast<std::size_t>((i + kv_.degree()) * d_); }

  KnotVector<T> kv_;
  int d_ = 0;
  std::vector<T> w_;
};

/// S(u, w) = sum_i sum_l N_{m1,i}(u) N_{m2,l}(w) W_{i,l}.  The net is stored
/// row-major in the u index: W_{i,l} at ((i+m1)(n2+m2) + (l+m2)) d.
template <class T>
class TensorProductSurface {
 public:
  TensorProductSurface() = default;
  TensorProductSurface(KnotVector<T> ku, KnotVector<T> kv, int dim, std::vector<T> net)
      : ku_(std::move(ku)), kv_(std::move(kv)), d_(dim), net_(std::move(net)) {
    if (d_ < 1) throw std::invalid_argument("TensorProductSurface: dimension must be >= 1");
    const auto expected = static_cast<std::size_t>(ku_.basis_count()) *
                          static_cast<std::size_t>(kv_.basis_count()) * static_cast<std::size_t>(d_);
    if (net_.size() != expected)
      throw std::invalid_argument("TensorProductSurface: control net does not match knot vectors");
    if (!detail::all_finite(net_))
      throw std::invalid_argument("TensorProductSurface: non-finite control coordinate");
  }

  const KnotVector<T>& knots_u() const { return ku_; }
  const KnotVector<T>& knots_v() const { return kv_; }
  int dim() const { return d_; }
  int rows() const { return ku_.basis_count(); }
  int cols() const { return kv_.basis_count(); }

  std::span<const T> control(int i, int l) const {
    return {net_.data() + index(i, l), static_cast<std::size_t>(d_)};
  }
  std::span<T> control(int i, int l) { return {net_.data() + index(i, l), static_cast<std::size_t>(d_)}; }
  const std::vector<T>& net_data() const { return net_; }

 private:
  std::size_t index(int i, int l) const {
    return (static_cast<std::size_t>(i + ku_.degree()) * static_cast<std::size_t>(cols()) +
            static_cast<std::size_t>(l + kv_.degree())) *
           static_cast<std::size_t>(d_);
  }

  KnotVector<T> ku_;
  KnotVector<T> kv_;
  int d_ = 0;
  std::vector<T> net_;
};

/// Values p_{j-m}, ..., p_j of the m+1 basis functions active on span j.
template <class T>
struct BasisValues {
  int span = 0;
  std::vector<T> values;

  /// N_{m,i} for i in span-m .. span.
  const T& operator()(int i) const {
    return values[static_cast<std::size_t>(i - (span - static_cast<int>(values.size()) + 1))];
  }
};

}  // namespace bbspline
