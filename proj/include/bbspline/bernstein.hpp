#pragma once

// Bernstein polynomials and two evaluators for polynomials in Bernstein form:
// the quadratic de Casteljau scheme and a linear-time scheme that still only
// forms convex combinations.

#include <cassert>
#include <span>
#include <stdexcept>
#include <vector>

namespace bbspline {

/// Scalar polynomial on [0,1] given by its Bernstein (b-form) coefficients.
template <class T>
struct BernsteinPoly {
  std::vector<T> coeffs;

  BernsteinPoly() = default;
  explicit BernsteinPoly(std::vector<T> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw std::invalid_argument("BernsteinPoly: no coefficients");
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// binom(n, k) accumulated in floating point, exact enough for n <= 60.
template <class T>
T binomial(int n, int k) {
  if (k < 0 || k > n) return T(0);
  if (k > n - k) k = n - k;
  T b(1);
  for (int i = 1; i <= k; ++i) b = b * T(n - k + i) / T(i);
  return b;
}

/// B^n_k(t); zero when k is outside [0, n].  Intended for n <= 60.
template <class T>
T bernstein_value(int n, int k, T t) {
  if (k < 0 || k > n) return T(0);
  T s = T(1) - t;
  T r = binomial<T>(n, k);
  for (int i = 0; i < k; ++i) r *= t;
  for (int i = 0; i < n - k; ++i) r *= s;
  return r;
}

/// d/dt B^n_k(t) = n (B^{n-1}_{k-1}(t) - B^{n-1}_k(t)).
template <class T>
T bernstein_derivative_value(int n, int k, T t) {
  assert(n >= 1);
  return T(n) * (bernstein_value<T>(n - 1, k - 1, t) - bernstein_value<T>(n - 1, k, t));
}

/// Sum c_k B^n_k(t) by repeated convex combinations; O(n^2).
template <class T>
T de_casteljau_eval(std::span<const T> c, T t) {
  assert(!c.empty());
  std::vector<T> w(c.begin(), c.end());
  const T s = T(1) - t;
  for (std::size_t r = 1; r < w.size(); ++r)
    for (std::size_t k = 0; k + r < w.size(); ++k) w[k] = s * w[k] + t * w[k + 1];
  return w[0];
}

template <class T>
T de_casteljau_eval(const BernsteinPoly<T>& p, T t) {
  return de_casteljau_eval<T>(std::span<const T>(p.coeffs), t);
}

// Linear-time evaluation.
//
// With w_k = B^n_k(t), the normalised partial sums Q_k = sum_{i<=k} w_i c_i /
// sum_{i<=k} w_i satisfy Q_k = (1 - h_k) Q_{k-1} + h_k c_k where
// h_k = w_k / sum_{i<=k} w_i.  Since w_k / w_{k-1} = (n-k+1)/k * t/(1-t) the
// weights obey h_k = x / (k + x) with x = h_{k-1} (n-k+1) t/(1-t), h_0 = 1.
// Q_n is the polynomial value.  The h_k depend only on (n, t), so one set of
// weights serves every coefficient row of the same degree.
template <class T>
class GeometricWeights {
 public:
  GeometricWeights() = default;
  GeometricWeights(int n, T t) { reset(n, t); }

  /// Prepares weights for degree n at t in [0, 1].  t == 1 is served by
  /// endpoint interpolation instead of the ratio t/(1-t).
  void reset(int n, T t) {
    n_ = n;
    at_end_ = (t == T(1));
    h_.resize(static_cast<std::size_t>(n) + 1);
    if (at_end_) return;
    const T ratio = t / (T(1) - t);
    h_[0] = T(1);
    for (int k = 1; k <= n; ++k) {
      const T x = h_[k - 1] * T(n - k + 1) * ratio;
      h_[k] = x / (T(k) + x);
    }
  }

  int degree() const { return n_; }

  /// Sum c_k B^n_k(t) for a coefficient row of length n+1.
  T apply(std::span<const T> c) const {
    assert(static_cast<int>(c.size()) == n_ + 1);
    if (at_end_) return c[n_];
    T q = c[0];
    for (int k = 1; k <= n_; ++k) q = (T(1) - h_[k]) * q + h_[k] * c[k];
    return q;
  }

 private:
  int n_ = 0;
  bool at_end_ = false;
  std::vector<T> h_;
};

/// Sum c_k B^n_k(t) in O(n) convex combinations.
template <class T>
T geometric_eval(std::span<const T> c, T t) {
  assert(!c.empty());
  GeometricWeights<T> w(static_cast<int>(c.size()) - 1, t);
  return w.apply(c);
}

template <class T>
T geometric_eval(const BernsteinPoly<T>& p, T t) {
  return geometric_eval<T>(std::span<const T>(p.coeffs), t);
}

}  // namespace bbspline
