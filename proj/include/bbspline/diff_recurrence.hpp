#pragma once

// Residuals of the differential recurrence between B-splines of equal degree
// on a clamped knot sequence with simple inner knots:
//
//   m N_{m,-m} + (t_1 - u) N'_{m,-m} = 0,
//   N_{m,i} + (t_i - u)/m N'_{m,i}
//       = v_i (N_{m,i+1} + (t_{m+i+2} - u)/m N'_{m,i+1}),   -m <= i <= n-2,
//   m N_{m,n-1} + (t_{n-1} - u) N'_{m,n-1} = 0.
//
// Values and derivatives come from the oracle recursions, so a small residual
// checks the identity the coefficient recurrences are built on.

#include <cmath>

#include "bbspline/bbf.hpp"
#include "bbspline/oracle.hpp"

namespace bbspline {

/// |LHS - RHS| of the relation for function index i at u (u not a knot).
template <class T>
T diff_recurrence_residual(const KnotVector<T>& kv, int i, const T& u) {
  using std::abs;
  const int m = kv.degree();
  const int n = kv.n();
  const T N = bspline_via_recurrence(kv, i, u);
  const T dN = bspline_derivative(kv, i, u);
  if (i == -m) return abs(T(m) * N + (kv[1] - u) * dN);
  if (i == n - 1) return abs(T(m) * N + (kv[n - 1] - u) * dN);
  const T N1 = bspline_via_recurrence(kv, i + 1, u);
  const T dN1 = bspline_derivative(kv, i + 1, u);
  const T lhs = N + (kv[i] - u) / T(m) * dN;
  const T rhs = v_factor(kv, i) * (N1 + (kv[m + i + 2] - u) / T(m) * dN1);
  return abs(lhs - rhs);
}

}  // namespace bbspline
