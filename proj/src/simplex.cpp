#include "minkit/simplex.hpp"

#include <cmath>
#include <vector>

namespace mink::lp {

namespace {

constexpr double kPivotTol = 1e-11;

// Tableau simplex with Bland's rule on the given starting basis.
// Returns false when unbounded.
bool run_simplex(Mat& T, std::vector<int>& basis, int m, int n) {
  const int max_iter = 20000;
  for (int iter = 0; iter < max_iter; ++iter) {
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (T(m, j) < -kPivotTol) { enter = j; break; }
    }
    if (enter < 0) return true;
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (T(i, enter) > kPivotTol) {
        double ratio = T(i, n) / T(i, enter);
        if (leave < 0 || ratio < best_ratio - kPivotTol ||
            (std::abs(ratio - best_ratio) <= kPivotTol && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) return false;
    double piv = T(leave, enter);
    T.row(leave) /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      double f = T(i, enter);
      if (f != 0.0) T.row(i) -= f * T.row(leave);
    }
    basis[leave] = enter;
  }
  throw NumericError("simplex: iteration cap reached");
}

}  // namespace

std::optional<Solution> solve_equality_form(const Mat& A, const Vec& b, const Vec& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  require(b.size() == m && c.size() == n, "simplex: dimension mismatch");

  // Phase 1 with artificial variables; rows flipped so b >= 0.
  Mat T(m + 1, n + m + 1);
  T.setZero();
  for (int i = 0; i < m; ++i) {
    double s = (b[i] < 0.0) ? -1.0 : 1.0;
    T.block(i, 0, 1, n) = s * A.row(i);
    T(i, n + i) = 1.0;
    T(i, n + m) = s * b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    basis[i] = n + i;
    T.row(m) -= T.row(i);  // objective = sum of artificials, reduced
  }
  for (int i = 0; i < m; ++i) T(m, n + i) = 0.0;
  if (!run_simplex(T, basis, m, n + m))
    throw NumericError("simplex: phase-1 unbounded");
  if (T(m, n + m) < -1e-8) return std::nullopt;  // infeasible

  // Drive any artificial still in the basis out (degenerate rows).
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n) {
      int enter = -1;
      for (int j = 0; j < n; ++j) {
        if (std::abs(T(i, j)) > kPivotTol) { enter = j; break; }
      }
      if (enter < 0) continue;  // redundant row
      double piv = T(i, enter);
      T.row(i) /= piv;
      for (int r = 0; r <= m; ++r) {
        if (r == i) continue;
        double f = T(r, enter);
        if (f != 0.0) T.row(r) -= f * T.row(i);
      }
      basis[i] = enter;
    }
  }

  // Phase 2: rebuild the objective row for c over the original columns.
  Mat T2(m + 1, n + 1);
  T2.setZero();
  T2.block(0, 0, m, n) = T.block(0, 0, m, n);
  T2.block(0, n, m, 1) = T.block(0, n + m, m, 1);
  for (int j = 0; j < n; ++j) T2(m, j) = c[j];
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) T2.row(m) -= c[basis[i]] * T2.row(i);
  }
  if (!run_simplex(T2, basis, m, n))
    throw NumericError("simplex: unbounded objective");

  Solution sol;
  sol.x = Vec::Zero(n);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) sol.x[basis[i]] = T2(i, n);
  }
  sol.objective = c.dot(sol.x);
  return sol;
}

bool feasible(const Mat& A, const Vec& b) {
  return solve_equality_form(A, b, Vec::Zero(A.cols())).has_value();
}

}  // namespace mink::lp
