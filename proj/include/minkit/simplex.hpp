#pragma once

#include <optional>

#include "minkit/common.hpp"

namespace mink::lp {

struct Solution {
  Vec x;
  double objective = 0.0;
};

// Solves  min c.x  s.t.  A x = b, x >= 0  with a dense two-phase simplex
// (Bland's rule). Returns nullopt when infeasible; throws NumericError on
// an unbounded problem. Desk scale only: A is at most a few hundred columns.
std::optional<Solution> solve_equality_form(const Mat& A, const Vec& b, const Vec& c);

// Feasibility of  A x = b, x >= 0.
bool feasible(const Mat& A, const Vec& b);

}  // namespace mink::lp
