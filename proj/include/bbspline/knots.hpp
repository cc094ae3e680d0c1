#pragma once

// Knot vectors t_{-m} <= ... <= t_0 < ... < t_n <= ... <= t_{n+m}.
//
// Indices follow the usual B-spline convention: boundary knots carry negative
// indices and the parameter domain is [t_0, t_n].  Storage is one contiguous
// array offset by m.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bbspline {

enum class KnotViolationKind { not_nondecreasing, degenerate_domain, inner_multiplicity };

struct KnotViolation {
  KnotViolationKind kind;
  int index;  // knot index (may be negative) where the violation was found
  std::string message;
};

template <class T>
class KnotVector {
 public:
  KnotVector() = default;

  /// knots holds t_{-m}, ..., t_{n+m} (n + 2m + 1 values).
  KnotVector(int degree, int n, std::vector<T> knots)
      : m_(degree), n_(n), t_(std::move(knots)) {
    if (m_ < 1) throw std::invalid_argument("KnotVector: degree must be >= 1");
    if (n_ < 1) throw std::invalid_argument("KnotVector: n must be >= 1");
    if (t_.size() != static_cast<std::size_t>(n_ + 2 * m_ + 1)) {
      std::ostringstream os;
      os << "KnotVector: expected " << n_ + 2 * m_ + 1 << " knots for degree " << m_
         << " and n = " << n_ << ", got " << t_.size();
      throw std::invalid_argument(os.str());
    }
  }

  int degree() const { return m_; }
  int n() const { return n_; }
  /// Number of B-spline basis functions (and control points), n + m.
  int basis_count() const { return n_ + m_; }

  /// t_i for -m <= i <= n + m.
  const T& operator[](int i) const { return t_[static_cast<std::size_t>(i + m_)]; }
  const std::vector<T>& knots() const { return t_; }

  const T& domain_begin() const { return (*this)[0]; }
  const T& domain_end() const { return (*this)[n_]; }

  friend bool operator==(const KnotVector&, const KnotVector&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<T> t_;
};

/// Checks ordering, a non-degenerate domain, and that no inner knot value
/// t_1..t_{n-1} repeats more than m times in the whole sequence.
template <class T>
std::optional<KnotViolation> validate(const KnotVector<T>& kv) {
  const int m = kv.degree();
  const int n = kv.n();
  for (int i = -m; i < n + m; ++i) {
    if (kv[i + 1] < kv[i]) {
      std::ostringstream os;
      os << "nondecreasing: t_" << i + 1 << " < t_" << i;
      return KnotViolation{KnotViolationKind::not_nondecreasing, i + 1, os.str()};
    }
  }
  if (!(kv[0] < kv[n]))
    return KnotViolation{KnotViolationKind::degenerate_domain, n,
                         "degenerate domain: t_0 == t_n"};
  int i = 1;
  while (i <= n - 1) {
    int lo = i, hi = i;
    while (lo > -m && kv[lo - 1] == kv[i]) --lo;
    while (hi < n + m && kv[hi + 1] == kv[i]) ++hi;
    if (hi - lo + 1 > m) {
      std::ostringstream os;
      os << "inner multiplicity: knot t_" << i << " occurs " << hi - lo + 1
         << " times (degree " << m << ")";
      return KnotViolation{KnotViolationKind::inner_multiplicity, i, os.str()};
    }
    i = hi + 1;
  }
  return std::nullopt;
}

/// Throws std::invalid_argument carrying the violation report.
template <class T>
void require_valid(const KnotVector<T>& kv) {
  if (auto v = validate(kv)) throw std::invalid_argument(v->message);
}

/// j with t_j <= u < t_{j+1}, t_j < t_{j+1}; u == t_n maps to the last
/// non-empty span.  O(log n).
template <class T>
int find_span(const KnotVector<T>& kv, const T& u) {
  const int m = kv.degree();
  const int n = kv.n();
  if (u < kv[0] || kv[n] < u) throw std::domain_error("find_span: parameter outside [t_0, t_n]");
  const auto& t = kv.knots();
  const auto first = t.begin() + m;
  const auto last = t.begin() + m + n + 1;
  if (u == kv[n]) {
    auto it = std::lower_bound(first, last, u);
    return static_cast<int>(it - first) - 1;
  }
  auto it = std::upper_bound(first, last, u);
  return static_cast<int>(it - first) - 1;
}

struct Clamping {
  bool start;
  bool end;
  friend bool operator==(const Clamping&, const Clamping&) = default;
};

template <class T>
Clamping is_clamped(const KnotVector<T>& kv) {
  return {kv[-kv.degree()] == kv[0], kv[kv.n()] == kv[kv.n() + kv.degree()]};
}

/// Smallest r with t_k < t_r.  Requires t_k < t_n.
template <class T>
int right_neighbor(const KnotVector<T>& kv, int k) {
  const int m = kv.degree();
  const auto& t = kv.knots();
  auto it = std::upper_bound(t.begin() + (k + m), t.end(), kv[k]);
  if (it == t.end()) throw std::domain_error("right_neighbor: no larger knot");
  return static_cast<int>(it - t.begin()) - m;
}

/// Largest l with t_l < t_k.  Requires t_k > t_0.
template <class T>
int left_neighbor(const KnotVector<T>& kv, int k) {
  const int m = kv.degree();
  const auto& t = kv.knots();
  auto it = std::lower_bound(t.begin(), t.begin() + (k + m), kv[k]);
  if (it == t.begin()) throw std::domain_error("left_neighbor: no smaller knot");
  return static_cast<int>(it - t.begin()) - 1 - m;
}

/// Span indices 0 <= j < n with t_j < t_{j+1}, ascending.
template <class T>
std::vector<int> nonempty_spans(const KnotVector<T>& kv) {
  std::vector<int> spans;
  for (int j = 0; j < kv.n(); ++j)
    if (kv[j] < kv[j + 1]) spans.push_back(j);
  return spans;
}

template <class T>
struct InflatedKnots {
  KnotVector<T> knots;
  int original_n;
};

/// Raises the multiplicity of t_{n+m} to m+1 by appending copies of it.
/// The result has the same degree and n1 = n + m - l where l+1 is the
/// original multiplicity of t_{n+m}.  No-op for end-clamped input.
template <class T>
InflatedKnots<T> inflate_end(const KnotVector<T>& kv) {
  const int m = kv.degree();
  const int n = kv.n();
  const T& last = kv[n + m];
  int l = 0;
  while (l < m && kv[n + m - l - 1] == last) ++l;
  std::vector<T> knots = kv.knots();
  for (int c = 0; c < m - l; ++c) knots.push_back(last);
  return {KnotVector<T>(m, n + m - l, std::move(knots)), n};
}

}  // namespace bbspline
