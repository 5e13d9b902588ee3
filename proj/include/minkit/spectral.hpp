#pragma once

#include <vector>

#include "minkit/operators.hpp"

namespace mink {

// One block of a real normal form: either a real eigenvalue acting on a
// line, or a scaled rotation  |lambda| [[cos phi, sin phi], [-sin phi, cos phi]]
// acting on a plane in its basis pair.
struct Block {
  enum class Kind { Real1D, Plane2D };
  Kind kind = Kind::Real1D;
  double lambda = 0.0;              // Real1D
  double modulus = 0.0;             // Plane2D
  double angle = 0.0;               // Plane2D, in (0, 2*pi]
  int col = 0;                      // Real1D basis column
  std::pair<int, int> basis_cols{0, 0};  // Plane2D basis columns
};

struct OrthogonalityEntry {
  int block_a = 0;
  int block_b = 0;
  double residual = 0.0;  // max s.i.p. residual between the two block bases
};

struct NormalForm {
  Mat P;  // columns = block basis vectors
  std::vector<Block> blocks;
  double residual = 0.0;  // ||P diag P^-1 - A||_F / ||A||_F
  std::vector<OrthogonalityEntry> orthogonality;   // cross-block s.i.p. flags
  std::vector<double> auerbach_residuals;          // per Plane2D block
  std::vector<double> block_isometry_residuals;    // per Plane2D block: |lambda|*(isometry) check
};

struct AuerbachResult {
  bool ok = false;
  Vec a;
  Vec b;
  double residual = 0.0;  // max(|[a,b]|, |[b,a]|) achieved
};

// Pure linear-algebra decomposition into conjugate-paired 2-D blocks and
// real 1-D blocks. Throws NumericError naming the Jordan obstruction for
// defective input.
NormalForm real_block_decomposition(const Mat& A, double tol = 1e-9);

// Unit vectors a, b spanning the given plane with [a,b] and [b,a] both
// near zero; grid search over directions with golden-section polish.
AuerbachResult auerbach_pair(const SipContext& ctx, const Vec& u, const Vec& v,
                             double tol = 1e-8);

NormalForm isometry_normal_form(const SipContext& ctx, const Mat& U, double tol = 1e-8);
NormalForm adjoint_abelian_normal_form(const SipContext& ctx, const Mat& A, double tol = 1e-8);

// Round-trip oracle: P blockdiag P^-1.
Mat reconstruct(const NormalForm& nf);

}  // namespace mink
