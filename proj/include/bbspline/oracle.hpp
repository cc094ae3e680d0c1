#pragma once

// Reference implementations used to verify the coefficient engine and as the
// benchmark baseline:
//   * generalized divided differences of truncated powers (the definition of
//     N_{m,i}),
//   * the de Boor-Mansfield-Cox degree recursion for single basis values and
//     their derivatives,
//   * de Boor-Cox point evaluation for curves and tensor-product surfaces.

#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "bbspline/geometry.hpp"
#include "bbspline/knots.hpp"
#include "bbspline/opcount.hpp"

namespace bbspline {

/// Working precision of the divided-difference oracle for floating inputs.
/// Divided differences of (t-u)^m_+ cancel badly in double for m ~ 10.
using WideReal = boost::multiprecision::cpp_bin_float_50;

template <class T>
using oracle_work_t =
    std::conditional_t<std::is_floating_point_v<decltype(raw(std::declval<T>()))>, WideReal, T>;

namespace detail {

template <class W, class T>
W to_work(const T& x) {
  return W(raw(x));
}

template <class T, class W>
T from_work(const W& x) {
  if constexpr (std::is_same_v<T, W>)
    return x;
  else
    return T(static_cast<decltype(raw(std::declval<T>()))>(x));
}

// f^{(r)}(x) / r! for f(x) = (x - c)^m_+, i.e. binom(m, r) (x - c)^{m-r}_+.
// At the kink the order-m term (x - c)^0_+ is 1 when kink_included, else 0.
template <class W>
W truncated_power_taylor(const W& x, const W& c, int m, int r, bool kink_included) {
  if (r > m) return W(0);
  if (x < c) return W(0);
  if (x == c) {
    if (r < m) return W(0);
    return kink_included ? W(1) : W(0);
  }
  W binom(1);
  for (int i = 1; i <= r; ++i) binom = binom * W(m - r + i) / W(i);
  W p(1);
  const W dx = x - c;
  for (int i = 0; i < m - r; ++i) p *= dx;
  return binom * p;
}

}  // namespace detail

/// Which one-sided value the divided-difference oracle returns at a point
/// where the B-spline is discontinuous.  Left reproduces the definition
/// literally ((x - c)^0_+ = 1 at x = c); Right matches half-open spans.
enum class Side { left, right };

/// [x_0, ..., x_l] f for f(t) = (t - u)^m_+, acting on t.  Coincident runs use
/// the derivative branch.  O(l^2) via a triangular table.
template <class W>
W divided_difference_truncpow(std::span<const W> x, int m, const W& u, Side side = Side::left) {
  if (x.empty()) throw std::invalid_argument("divided_difference_truncpow: no knots");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] < x[i - 1]) throw std::domain_error("divided_difference_truncpow: knots must be nondecreasing");
  const bool kink = side == Side::left;
  const std::size_t len = x.size();
  // d[i] holds [x_i, ..., x_{i+level}] f after each pass.
  std::vector<W> d(len);
  for (std::size_t i = 0; i < len; ++i) d[i] = detail::truncated_power_taylor(x[i], u, m, 0, kink);
  for (std::size_t level = 1; level < len; ++level) {
    for (std::size_t i = 0; i + level < len; ++i) {
      if (x[i] == x[i + level])
        d[i] = detail::truncated_power_taylor(x[i], u, m, static_cast<int>(level), kink);
      else
        d[i] = (d[i + 1] - d[i]) / (x[i + level] - x[i]);
    }
  }
  return d[0];
}

/// N_{m,i}(u) = (t_{i+m+1} - t_i) [t_i, ..., t_{i+m+1}] (t - u)^m_+, evaluated
/// in working type W.  Zero outside [t_i, t_{i+m+1}].  Right-continuous inside
/// the domain, left limit at u = t_n.
template <class T, class W = oracle_work_t<T>>
T bspline_via_divdiff(const KnotVector<T>& kv, int i, const T& u) {
  const int m = kv.degree();
  if (u < kv[i] || kv[i + m + 1] < u) return T(0);
  if (kv[i + m + 1] == kv[i]) return T(0);
  std::vector<W> x;
  x.reserve(static_cast<std::size_t>(m + 2));
  for (int k = i; k <= i + m + 1; ++k) x.push_back(detail::to_work<W>(kv[k]));
  const W uw = detail::to_work<W>(u);
  const Side side = (u == kv[kv.n()]) ? Side::left : Side::right;
  const W dd = divided_difference_truncpow<W>(std::span<const W>(x), m, uw, side);
  return detail::from_work<T>((x.back() - x.front()) * dd);
}

namespace detail {

// N_{p,i}(u) for any degree p <= m on the knots of kv, by the degree
// recursion with the 0/0 := 0 convention.  N_{0,k} = 1 exactly on span j.
template <class T>
T recurrence_value(const KnotVector<T>& kv, int p, int i, const T& u, int j) {
  std::vector<T> N(static_cast<std::size_t>(p + 1));
  for (int k = 0; k <= p; ++k) N[static_cast<std::size_t>(k)] = (i + k == j) ? T(1) : T(0);
  for (int q = 1; q <= p; ++q) {
    for (int k = 0; k + q <= p; ++k) {
      const int a = i + k;
      T v(0);
      const auto ku = static_cast<std::size_t>(k);
      if (kv[a + q] != kv[a]) v += (u - kv[a]) * N[ku] / (kv[a + q] - kv[a]);
      if (kv[a + q + 1] != kv[a + 1]) v += (kv[a + q + 1] - u) * N[ku + 1] / (kv[a + q + 1] - kv[a + 1]);
      N[ku] = v;
    }
  }
  return N[0];
}

}  // namespace detail

/// N_{m,i}(u) by the de Boor-Mansfield-Cox recursion; O(m^2).
template <class T>
T bspline_via_recurrence(const KnotVector<T>& kv, int i, const T& u) {
  const int j = find_span(kv, u);
  return detail::recurrence_value(kv, kv.degree(), i, u, j);
}

/// N'_{m,i}(u) = m (N_{m-1,i}/(t_{m+i}-t_i) - N_{m-1,i+1}/(t_{m+i+1}-t_{i+1})).
template <class T>
T bspline_derivative(const KnotVector<T>& kv, int i, const T& u) {
  const int m = kv.degree();
  const int j = find_span(kv, u);
  T d(0);
  if (kv[m + i] != kv[i]) d += detail::recurrence_value(kv, m - 1, i, u, j) / (kv[m + i] - kv[i]);
  if (kv[m + i + 1] != kv[i + 1])
    d -= detail::recurrence_value(kv, m - 1, i + 1, u, j) / (kv[m + i + 1] - kv[i + 1]);
  return T(m) * d;
}

/// de Boor-Cox evaluation with a reusable workspace.
template <class T>
class DeBoorCox {
 public:
  /// Writes S(u) into out (length d).  ctrl(i) must return W_i.
  template <class ControlFn>
  void evaluate(const KnotVector<T>& kv, int d, ControlFn&& ctrl, const T& u, std::span<T> out) {
    const int m = kv.degree();
    const int j = find_span(kv, u);
    work_.resize(static_cast<std::size_t>((m + 1) * d));
    for (int r = 0; r <= m; ++r) {
      auto w = ctrl(j - m + r);
      for (int c = 0; c < d; ++c) work_[static_cast<std::size_t>(r * d + c)] = w[static_cast<std::size_t>(c)];
    }
    for (int level = 1; level <= m; ++level) {
      for (int r = m; r >= level; --r) {
        const int i = j - m + r;
        const T alpha = (u - kv[i]) / (kv[i + m + 1 - level] - kv[i]);
        const T beta = T(1) - alpha;
        T* cur = work_.data() + r * d;
        const T* prev = work_.data() + (r - 1) * d;
        for (int c = 0; c < d; ++c) cur[c] = beta * prev[c] + alpha * cur[c];
      }
    }
    for (int c = 0; c < d; ++c) out[static_cast<std::size_t>(c)] = work_[static_cast<std::size_t>(m * d + c)];
  }

  void evaluate(const BSplineCurve<T>& curve, const T& u, std::span<T> out) {
    evaluate(curve.knots(), curve.dim(), [&](int i) { return curve.control(i); }, u, out);
  }

 private:
  std::vector<T> work_;
};

/// S(u) by the triangular convex-combination scheme over the m+1 active
/// control points; O(m^2 d).
template <class T>
std::vector<T> de_boor_cox_point(const BSplineCurve<T>& curve, const T& u) {
  std::vector<T> out(static_cast<std::size_t>(curve.dim()));
  DeBoorCox<T>().evaluate(curve, u, out);
  return out;
}

/// Surface point by de Boor-Cox along w for every active u-row, then along u.
template <class T>
class TensorDeBoorCox {
 public:
  void evaluate(const TensorProductSurface<T>& s, const T& u, const T& w, std::span<T> out) {
    const auto& ku = s.knots_u();
    const int m1 = ku.degree();
    const int d = s.dim();
    const int j1 = find_span(ku, u);
    rows_.resize(static_cast<std::size_t>((m1 + 1) * d));
    for (int r = 0; r <= m1; ++r) {
      const int i = j1 - m1 + r;
      along_v_.evaluate(s.knots_v(), d, [&](int l) { return s.control(i, l); }, w,
                        std::span<T>(rows_.data() + r * d, static_cast<std::size_t>(d)));
    }
    along_u_.evaluate(ku, d,
                      [&](int i) {
                        return std::span<const T>(rows_.data() + (i - (j1 - m1)) * d, static_cast<std::size_t>(d));
                      },
                      u, out);
  }

 private:
  DeBoorCox<T> along_v_;
  DeBoorCox<T> along_u_;
  std::vector<T> rows_;
};

template <class T>
std::vector<T> tensor_de_boor_cox_point(const TensorProductSurface<T>& s, const T& u, const T& w) {
  std::vector<T> out(static_cast<std::size_t>(s.dim()));
  TensorDeBoorCox<T>().evaluate(s, u, w, out);
  return out;
}

/// All m+1 non-vanishing N_{m,i}(u) at once by the degree recursion,
/// de Boor's triangular scheme; O(m^2) with m(m+1)/2 divisions.
template <class T>
class RecurrenceBasis {
 public:
  void evaluate(const KnotVector<T>& kv, const T& u, BasisValues<T>& out) {
    const int m = kv.degree();
    const int j = find_span(kv, u);
    const auto size = static_cast<std::size_t>(m + 1);
    left_.resize(size);
    right_.resize(size);
    out.span = j;
    out.values.resize(size);
    auto& N = out.values;
    N[0] = T(1);
    for (int p = 1; p <= m; ++p) {
      const auto pu = static_cast<std::size_t>(p);
      left_[pu] = u - kv[j + 1 - p];
      right_[pu] = kv[j + p] - u;
      T saved(0);
      for (int r = 0; r < p; ++r) {
        const auto ru = static_cast<std::size_t>(r);
        const T tmp = N[ru] / (right_[ru + 1] + left_[pu - ru]);
        N[ru] = saved + right_[ru + 1] * tmp;
        saved = left_[pu - ru] * tmp;
      }
      N[pu] = saved;
    }
  }

 private:
  std::vector<T> left_;
  std::vector<T> right_;
};

}  // namespace bbspline
