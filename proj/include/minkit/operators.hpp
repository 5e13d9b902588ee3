#pragma once

#include <optional>
#include <vector>

#include "minkit/sip.hpp"

namespace mink {

struct Witness {
  Vec x;
  Vec y;
};

// Verdict of a sampled operator-class predicate, with the worst offending
// pair kept for regression replay.
struct PredicateReport {
  bool verdict = false;
  double max_residual = 0.0;
  std::optional<Witness> witness;
  int samples = 0;
};

struct SampleOptions {
  int samples = 500;
  double tol = 1e-6;
  std::uint64_t seed = 0;
};

// A^T(y): the unique vector with [A(x),y] = [x, A^T(y)] for all x.
Vec gen_adjoint_apply(const SipContext& ctx, const Mat& A, const Vec& y);

PredicateReport is_self_adjoint(const SipContext& ctx, const Mat& A,
                                const SampleOptions& opt = {});
PredicateReport is_adjoint_abelian(const SipContext& ctx, const Mat& A,
                                   const SampleOptions& opt = {});
PredicateReport is_isometry(const SipContext& ctx, const Mat& U,
                            const SampleOptions& opt = {});
PredicateReport iso_abelian_check(const SipContext& ctx, const Mat& U,
                                  const SampleOptions& opt = {});
// Residuals of (AB)^T = B^T A^T and (lambda A)^T = lambda A^T over sampled y.
PredicateReport adjoint_algebra_check(const SipContext& ctx, const Mat& A,
                                      const Mat& B, double lambda,
                                      const SampleOptions& opt = {});

// The two sign functions from the l_p diagonalizability argument, evaluated
// over (p, tan phi) grids. Branch 1 covers sgn(-sin phi) = -1, branch 2
// covers sgn(-sin phi) = +1 (requires |tan phi| < 1).
struct LpScanRow {
  double p;
  double tan_phi;
  int branch;
  double value;
};

struct LpScanTable {
  std::vector<LpScanRow> rows;
  bool all_positive = true;
};

double lp_sign_function(double p, double tan_phi, int branch);
LpScanTable lp_rotation_scan(const std::vector<double>& p_grid,
                             const std::vector<double>& tan_phi_grid);

}  // namespace mink
