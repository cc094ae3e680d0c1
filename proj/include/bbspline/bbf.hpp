#pragma once

// Bernstein-Bezier coefficients of all B-spline basis functions over all
// non-empty knot spans.
//
// Over a non-empty span [t_j, t_{j+1}) with local parameter
// t = (u - t_j) / (t_{j+1} - t_j),
//
//     N_{m,i}(u) = sum_{k=0}^{m} b_k^{(i,j)} B^m_k(t),   i = j-m, ..., j.
//
// The two outer rows (i = j and i = j-m) have a single non-zero entry given in
// closed form.  The interior rows follow from the differential recurrence
// between N_{m,i} and N_{m,i+1}: a two-term recurrence in k that runs from
// k = m down to 0 and is seeded by continuity with the span to the right (or,
// for the last span of an end-clamped sequence, by N_{m,i}(t_n) = 0).  Each
// coefficient costs O(1), so the whole table costs O(n_e m^2).

#include <cassert>
#include <span>
#include <stdexcept>
#include <vector>

#include "bbspline/knots.hpp"
#include "bbspline/opcount.hpp"

namespace bbspline {

/// Per-span dense (m+1) x (m+1) blocks stored contiguously.  Block row r holds
/// the coefficients of N_{m, j-m+r}; column k multiplies B^m_k.
template <class T>
class BBCoeffTable {
 public:
  BBCoeffTable() = default;
  BBCoeffTable(int degree, int n, std::vector<int> spans)
      : m_(degree), n_(n), spans_(std::move(spans)), rank_(static_cast<std::size_t>(n), -1) {
    for (std::size_t q = 0; q < spans_.size(); ++q) rank_[static_cast<std::size_t>(spans_[q])] = static_cast<int>(q);
    data_.assign(spans_.size() * block_size(), T(0));
  }

  int degree() const { return m_; }
  int n() const { return n_; }
  const std::vector<int>& spans() const { return spans_; }
  bool has_span(int j) const { return j >= 0 && j < n_ && rank_[static_cast<std::size_t>(j)] >= 0; }

  /// Row of N_{m,i} over span j (i in j-m..j), length m+1.
  std::span<T> row(int j, int i) {
    return {data_.data() + offset(j, i), static_cast<std::size_t>(m_ + 1)};
  }
  std::span<const T> row(int j, int i) const {
    return {data_.data() + offset(j, i), static_cast<std::size_t>(m_ + 1)};
  }

  /// b_k^{(i,j)}, returning 0 for inactive rows and empty spans.
  T coeff(int j, int i, int k) const {
    if (!has_span(j) || i < j - m_ || i > j) return T(0);
    return row(j, i)[static_cast<std::size_t>(k)];
  }

  /// Whole (m+1)^2 block of span j, row-major.
  std::span<const T> block(int j) const {
    return {data_.data() + block_offset(j), block_size()};
  }

 private:
  std::size_t block_size() const { return static_cast<std::size_t>((m_ + 1) * (m_ + 1)); }
  std::size_t block_offset(int j) const {
    if (!has_span(j)) throw std::domain_error("BBCoeffTable: span is empty or out of range");
    return static_cast<std::size_t>(rank_[static_cast<std::size_t>(j)]) * block_size();
  }
  std::size_t offset(int j, int i) const {
    assert(i >= j - m_ && i <= j);
    return block_offset(j) + static_cast<std::size_t>((i - (j - m_)) * (m_ + 1));
  }

  int m_ = 0;
  int n_ = 0;
  std::vector<int> spans_;
  std::vector<int> rank_;
  std::vector<T> data_;
};

/// The single non-zero coefficients of the two outer rows of span j:
/// b_m^{(j,j)} and b_0^{(j-m,j)}.
template <class T>
struct EndpointCoeffs {
  T last_row_m;    // b_m^{(j,j)}
  T first_row_0;   // b_0^{(j-m,j)}
};

template <class T>
EndpointCoeffs<T> stage1_endpoint_coeffs(const KnotVector<T>& kv, int j) {
  const int m = kv.degree();
  const T h = kv[j + 1] - kv[j];
  const T p = ipow(h, m - 1);
  T right = p;
  T left = p;
  for (int k = 2; k <= m; ++k) {
    right /= kv[j + k] - kv[j];
    left /= kv[j + 1] - kv[j + 1 - k];
  }
  return {right, left};
}

/// Rows b^{(j,j)} and b^{(j-m,j)} written into the given (m+1)-spans.
template <class T>
void stage1_endpoint_rows(const KnotVector<T>& kv, int j, std::span<T> row_j, std::span<T> row_j_minus_m) {
  const int m = kv.degree();
  const auto c = stage1_endpoint_coeffs(kv, j);
  for (int k = 0; k <= m; ++k) {
    row_j[static_cast<std::size_t>(k)] = T(0);
    row_j_minus_m[static_cast<std::size_t>(k)] = T(0);
  }
  row_j[static_cast<std::size_t>(m)] = c.last_row_m;
  row_j_minus_m[0] = c.first_row_0;
}

/// One interior row of the last span j = n-1 of an end-clamped sequence:
///   b_m = 0,  b_k = a b_{k+1} + c b'_{k+1}
/// with a = (t_{n-1}-t_i)/(t_n-t_i), c = (t_n-t_{n-1})/(t_n-t_{i+1}) and b'
/// the row of N_{m,i+1}.
template <class T>
void last_span_row(const KnotVector<T>& kv, int i, std::span<const T> next_row, std::span<T> out) {
  const int m = kv.degree();
  const int n = kv.n();
  const T a = (kv[n - 1] - kv[i]) / (kv[n] - kv[i]);
  const T c = (kv[n] - kv[n - 1]) / (kv[n] - kv[i + 1]);
  out[static_cast<std::size_t>(m)] = T(0);
  for (int k = m - 1; k >= 0; --k) {
    const auto ku = static_cast<std::size_t>(k);
    out[ku] = a * out[ku + 1] + c * next_row[ku + 1];
  }
}

/// Full block of the last span j = n-1: entry [r][k] = b_k^{(n-1-m+r, n-1)}.
/// Rows r = 0 and r = m come from the endpoint formulas; rows for
/// i = n-2 down to n-m are filled by last_span_row, each consuming row i+1.
/// Requires t_n = t_{n+m} and t_{n-1} < t_n.
template <class T>
std::vector<std::vector<T>> last_span_interior_rows(const KnotVector<T>& kv) {
  const int m = kv.degree();
  const int n = kv.n();
  std::vector<std::vector<T>> rows(static_cast<std::size_t>(m + 1), std::vector<T>(static_cast<std::size_t>(m + 1), T(0)));
  stage1_endpoint_rows<T>(kv, n - 1, rows[static_cast<std::size_t>(m)], rows[0]);
  for (int i = n - 2; i >= n - m; --i) {
    const auto r = static_cast<std::size_t>(i - (n - 1 - m));
    last_span_row<T>(kv, i, rows[r + 1], rows[r]);
  }
  return rows;
}

/// v_i = (t_{m+i+1} - t_i) / (t_{m+i+2} - t_{i+1}).
template <class T>
T v_factor(const KnotVector<T>& kv, int i) {
  const int m = kv.degree();
  return (kv[m + i + 1] - kv[i]) / (kv[m + i + 2] - kv[i + 1]);
}

/// Interior row i (j-m+1 <= i <= j-1) of a span j that is not the last one:
///   b_m = seed,
///   b_k = a b_{k+1} + (v_i / (t_{j+1}-t_i)) (alpha b'_k + beta b'_{k+1}),
/// a = (t_j-t_i)/(t_{j+1}-t_i), alpha = t_{j+1}-t_{m+i+2}, beta = t_{m+i+2}-t_j.
/// seed is b_0^{(i,r-1)} where t_r is the right neighbor of t_{j+1}.
template <class T>
void interior_row(const KnotVector<T>& kv, int j, int i, std::span<const T> next_row, const T& seed,
                  std::span<T> out) {
  const int m = kv.degree();
  const T width = kv[j + 1] - kv[i];
  const T a = (kv[j] - kv[i]) / width;
  const T c = v_factor(kv, i) / width;
  const T alpha = kv[j + 1] - kv[m + i + 2];
  const T beta = kv[m + i + 2] - kv[j];
  out[static_cast<std::size_t>(m)] = seed;
  for (int k = m - 1; k >= 0; --k) {
    const auto ku = static_cast<std::size_t>(k);
    out[ku] = a * out[ku + 1] + c * (alpha * next_row[ku] + beta * next_row[ku + 1]);
  }
}

namespace detail {

// Table for an end-clamped, validated knot vector.
template <class T>
BBCoeffTable<T> compute_clamped_table(const KnotVector<T>& kv) {
  const int m = kv.degree();
  const int n = kv.n();
  BBCoeffTable<T> table(m, n, nonempty_spans(kv));
  const auto& spans = table.spans();
  if (spans.empty() || spans.back() != n - 1)
    throw std::invalid_argument("compute_table: last span [t_{n-1}, t_n) must be non-empty");

  for (auto q = spans.size(); q-- > 0;) {
    const int j = spans[q];
    stage1_endpoint_rows<T>(kv, j, table.row(j, j), table.row(j, j - m));
    if (j == n - 1) {
      for (int i = j - 1; i >= j - m + 1; --i)
        last_span_row<T>(kv, i, table.row(j, i + 1), table.row(j, i));
      continue;
    }
    const int seed_span = right_neighbor(kv, j + 1) - 1;
    for (int i = j - 1; i >= j - m + 1; --i) {
      // Rows that are inactive on the seed span vanish at t_{j+1}.
      const T seed = table.coeff(seed_span, i, 0);
      interior_row<T>(kv, j, i, table.row(j, i + 1), seed, table.row(j, i));
    }
  }
  return table;
}

}  // namespace detail

/// Coefficients of every basis function over every non-empty span j < n.
/// An end-unclamped sequence is inflated first and the result restricted to
/// the original spans.  Throws std::invalid_argument on invalid knots.
template <class T>
BBCoeffTable<T> compute_table(const KnotVector<T>& kv) {
  require_valid(kv);
  if (is_clamped(kv).end) return detail::compute_clamped_table(kv);

  const auto inflated = inflate_end(kv);
  const auto full = detail::compute_clamped_table(inflated.knots);
  const int m = kv.degree();
  BBCoeffTable<T> table(m, kv.n(), nonempty_spans(kv));
  for (int j : table.spans()) {
    auto src = full.block(j);
    for (int i = j - m; i <= j; ++i) {
      auto dst = table.row(j, i);
      const auto r = static_cast<std::size_t>(i - (j - m));
      for (int k = 0; k <= m; ++k)
        dst[static_cast<std::size_t>(k)] = src[r * static_cast<std::size_t>(m + 1) + static_cast<std::size_t>(k)];
    }
  }
  return table;
}

// Explicit solutions of the two recurrences, kept separate from the
// recurrence code as a cross-check.

/// b_k^{(i,n-1)} = c sum_{l=0}^{m-k-1} a^l b'_{k+1+l}.
template <class T>
std::vector<T> last_span_row_closed_form(const KnotVector<T>& kv, int i, std::span<const T> next_row) {
  const int m = kv.degree();
  const int n = kv.n();
  const T a = (kv[n - 1] - kv[i]) / (kv[n] - kv[i]);
  const T c = (kv[n] - kv[n - 1]) / (kv[n] - kv[i + 1]);
  std::vector<T> out(static_cast<std::size_t>(m + 1), T(0));
  for (int k = 0; k < m; ++k) {
    T sum(0);
    T pw(1);
    for (int l = 0; l <= m - k - 1; ++l) {
      sum += pw * next_row[static_cast<std::size_t>(k + 1 + l)];
      pw *= a;
    }
    out[static_cast<std::size_t>(k)] = c * sum;
  }
  return out;
}

/// b_k^{(i,j)} = a^{m-k} seed + sum_{l=0}^{m-k-1} a^l (v_i/(t_{j+1}-t_i)) q_{k+l},
/// q_l = alpha b'_l + beta b'_{l+1}.
template <class T>
std::vector<T> interior_row_closed_form(const KnotVector<T>& kv, int j, int i, std::span<const T> next_row,
                                        const T& seed) {
  const int m = kv.degree();
  const T width = kv[j + 1] - kv[i];
  const T a = (kv[j] - kv[i]) / width;
  const T c = v_factor(kv, i) / width;
  const T alpha = kv[j + 1] - kv[m + i + 2];
  const T beta = kv[m + i + 2] - kv[j];
  std::vector<T> out(static_cast<std::size_t>(m + 1));
  for (int k = 0; k <= m; ++k) {
    T sum = ipow(a, m - k) * seed;
    T pw(1);
    for (int l = 0; l <= m - k - 1; ++l) {
      const auto kl = static_cast<std::size_t>(k + l);
      sum += pw * c * (alpha * next_row[kl] + beta * next_row[kl + 1]);
      pw *= a;
    }
    out[static_cast<std::size_t>(k)] = sum;
  }
  return out;
}

}  // namespace bbspline
