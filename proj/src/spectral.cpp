#include "minkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace mink {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Mat block_diagonal(const NormalForm& nf) {
  const int n = static_cast<int>(nf.P.rows());
  Mat D = Mat::Zero(n, n);
  for (const Block& b : nf.blocks) {
    if (b.kind == Block::Kind::Real1D) {
      D(b.col, b.col) = b.lambda;
    } else {
      const double c = std::cos(b.angle), s = std::sin(b.angle);
      const int i = b.basis_cols.first, j = b.basis_cols.second;
      D(i, i) = b.modulus * c;
      D(i, j) = b.modulus * s;
      D(j, i) = -b.modulus * s;
      D(j, j) = b.modulus * c;
    }
  }
  return D;
}

double reconstruction_residual(const Mat& A, const NormalForm& nf) {
  Mat R = nf.P * block_diagonal(nf) * nf.P.inverse();
  return (R - A).norm() / std::max(A.norm(), 1.0);
}

// Golden-section minimization of f over [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - gr * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + gr * (b - a); fd = f(d);
    }
  }
  return (fc < fd) ? c : d;
}

// Rotating the eigen-pair basis by theta (and rescaling both vectors by a
// common factor) leaves the 2x2 rotation block unchanged; this picks the
// representative closest to an Auerbach pair.
void polish_plane_basis(const SipContext& ctx, Vec& a, Vec& b, double& residual) {
  auto candidate = [&](double theta, Vec& ca, Vec& cb) {
    ca = std::cos(theta) * a - std::sin(theta) * b;
    cb = std::sin(theta) * a + std::cos(theta) * b;
    double s = ctx.model.norm(ca);
    ca /= s;
    cb /= s;
  };
  auto score = [&](double theta) {
    Vec ca, cb;
    candidate(theta, ca, cb);
    double r = std::max(std::abs(sip(ctx, cb, ca)), std::abs(sip(ctx, ca, cb)));
    return std::max(r, std::abs(ctx.model.norm(cb) - 1.0));
  };
  const int grid = 512;
  double best_theta = 0.0, best = score(0.0);
  for (int i = 1; i < grid; ++i) {
    double theta = kTwoPi * i / grid;
    double r = score(theta);
    if (r < best) { best = r; best_theta = theta; }
  }
  double step = kTwoPi / grid;
  double theta = golden_min(score, best_theta - step, best_theta + step, 80);
  if (score(theta) > best) theta = best_theta;
  Vec ca, cb;
  candidate(theta, ca, cb);
  a = ca;
  b = cb;
  residual = score(theta);
}

double cross_block_residual(const SipContext& ctx, const NormalForm& nf, int i, int j) {
  auto cols = [&](const Block& blk) {
    std::vector<int> c;
    if (blk.kind == Block::Kind::Real1D) c.push_back(blk.col);
    else { c.push_back(blk.basis_cols.first); c.push_back(blk.basis_cols.second); }
    return c;
  };
  double r = 0.0;
  for (int ci : cols(nf.blocks[i])) {
    for (int cj : cols(nf.blocks[j])) {
      r = std::max(r, std::abs(sip(ctx, nf.P.col(cj), nf.P.col(ci))));
      r = std::max(r, std::abs(sip(ctx, nf.P.col(ci), nf.P.col(cj))));
    }
  }
  return r;
}

void attach_verification(const SipContext& ctx, NormalForm& nf) {
  for (size_t i = 0; i < nf.blocks.size(); ++i)
    for (size_t j = i + 1; j < nf.blocks.size(); ++j)
      nf.orthogonality.push_back({static_cast<int>(i), static_cast<int>(j),
                                  cross_block_residual(ctx, nf, static_cast<int>(i),
                                                       static_cast<int>(j))});
}

// In the block basis the restriction is |lambda| F_phi; check that it
// scales the model norm by exactly |lambda| on plane samples.
double dilatation_residual(const SipContext& ctx, const Mat& A, const Vec& a, const Vec& b,
                           double modulus) {
  double r = 0.0;
  const int m = 32;
  for (int k = 0; k < m; ++k) {
    double t = kTwoPi * k / m;
    Vec w = std::cos(t) * a + std::sin(t) * b;
    r = std::max(r, std::abs(ctx.model.norm(A * w) - modulus * ctx.model.norm(w)));
  }
  return r;
}

NormalForm normal_form_common(const SipContext& ctx, const Mat& A, double tol) {
  NormalForm nf = real_block_decomposition(A, std::max(tol, 1e-9));
  for (size_t bi = 0; bi < nf.blocks.size(); ++bi) {
    Block& blk = nf.blocks[bi];
    if (blk.kind == Block::Kind::Real1D) {
      Vec c = nf.P.col(blk.col);
      nf.P.col(blk.col) = c / ctx.model.norm(c);
    } else {
      Vec a = nf.P.col(blk.basis_cols.first);
      Vec b = nf.P.col(blk.basis_cols.second);
      double resid = 0.0;
      polish_plane_basis(ctx, a, b, resid);
      nf.P.col(blk.basis_cols.first) = a;
      nf.P.col(blk.basis_cols.second) = b;
      nf.auerbach_residuals.push_back(resid);
      nf.block_isometry_residuals.push_back(
          dilatation_residual(ctx, A, a, b, blk.modulus));
    }
  }
  nf.residual = reconstruction_residual(A, nf);
  attach_verification(ctx, nf);
  return nf;
}

}  // namespace

NormalForm real_block_decomposition(const Mat& A, double tol) {
  require(A.rows() == A.cols() && A.rows() >= 1, "decomposition: A must be square");
  require_finite(A, "decomposition input");
  const int n = static_cast<int>(A.rows());
  Eigen::EigenSolver<Mat> es(A);
  require(es.info() == Eigen::Success, "decomposition: eigen solver failed");
  const Eigen::VectorXcd evals = es.eigenvalues();
  const Eigen::MatrixXcd evecs = es.eigenvectors();
  const double scale = std::max(A.norm(), 1.0);

  struct RealEntry { double lambda; Vec v; };
  struct PlaneEntry { double modulus, angle; Vec a, b; };
  std::vector<RealEntry> reals;
  std::vector<PlaneEntry> planes;
  std::vector<bool> used(n, false);

  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::complex<double> lam = evals[i];
    if (std::abs(lam.imag()) <= 1e-9 * scale) {
      Vec v = evecs.col(i).real();
      if (v.norm() < 1e-12) v = evecs.col(i).imag();
      reals.push_back({lam.real(), v / v.norm()});
      used[i] = true;
      continue;
    }
    // pair with the conjugate eigenvalue
    int mate = -1;
    for (int j = i + 1; j < n; ++j) {
      if (!used[j] && std::abs(evals[j] - std::conj(lam)) <= 1e-7 * scale) { mate = j; break; }
    }
    if (mate < 0)
      throw NumericError("decomposition: unpaired complex eigenvalue (Jordan obstruction?)");
    used[i] = used[mate] = true;
    // take the representative with positive imaginary part so the block is
    // [[alpha, beta], [-beta, alpha]] with beta > 0
    Eigen::VectorXcd u = evecs.col(lam.imag() > 0 ? i : mate);
    if (lam.imag() < 0) lam = std::conj(lam);
    Vec a = u.real(), b = u.imag();
    double s = std::sqrt(a.squaredNorm() + b.squaredNorm());
    a /= s;
    b /= s;
    double modulus = std::abs(lam);
    double angle = std::atan2(lam.imag(), lam.real());
    if (angle <= 0.0) angle += kTwoPi;
    planes.push_back({modulus, angle, a, b});
  }

  // deterministic ordering: real blocks by descending lambda (so +1 before
  // -1 for isometries), then 2-D blocks by modulus then angle
  std::stable_sort(reals.begin(), reals.end(),
                   [](const RealEntry& x, const RealEntry& y) { return x.lambda > y.lambda; });
  std::stable_sort(planes.begin(), planes.end(), [](const PlaneEntry& x, const PlaneEntry& y) {
    if (x.modulus != y.modulus) return x.modulus > y.modulus;
    return x.angle < y.angle;
  });

  NormalForm nf;
  nf.P = Mat::Zero(n, n);
  int col = 0;
  for (const RealEntry& r : reals) {
    Block b;
    b.kind = Block::Kind::Real1D;
    b.lambda = r.lambda;
    b.col = col;
    nf.P.col(col++) = r.v;
    nf.blocks.push_back(b);
  }
  for (const PlaneEntry& p : planes) {
    Block b;
    b.kind = Block::Kind::Plane2D;
    b.modulus = p.modulus;
    b.angle = p.angle;
    b.basis_cols = {col, col + 1};
    nf.P.col(col) = p.a;
    nf.P.col(col + 1) = p.b;
    col += 2;
    nf.blocks.push_back(b);
  }

  Eigen::FullPivLU<Mat> lu(nf.P);
  if (!lu.isInvertible())
    throw NumericError("decomposition: defective operator (Jordan block), eigenbasis singular");
  nf.residual = reconstruction_residual(A, nf);
  if (nf.residual > tol)
    throw NumericError("decomposition: defective operator (Jordan block), residual " +
                       std::to_string(nf.residual));
  return nf;
}

AuerbachResult auerbach_pair(const SipContext& ctx, const Vec& u, const Vec& v, double tol) {
  if (!ctx.model.classify().smooth)
    throw UnsupportedError("auerbach_pair: model is not smooth");
  Mat span(u.size(), 2);
  span.col(0) = u;
  span.col(1) = v;
  require(Eigen::FullPivLU<Mat>(span).rank() == 2, "auerbach_pair: vectors do not span a plane");

  auto make_pair = [&](double theta, Vec& a, Vec& b) -> bool {
    Vec a0 = std::cos(theta) * u + std::sin(theta) * v;
    a = a0 / ctx.model.norm(a0);
    // [.,a] is linear in the first slot: its kernel inside the plane
    double c1 = sip(ctx, u, a), c2 = sip(ctx, v, a);
    Vec b0 = c2 * u - c1 * v;
    if (b0.norm() < 1e-12) return false;
    if (c2 * std::sin(theta) + (-c1) * std::cos(theta) < 0.0) b0 = -b0;  // orientation
    b = b0 / ctx.model.norm(b0);
    return true;
  };
  auto score = [&](double theta) {
    Vec a, b;
    if (!make_pair(theta, a, b)) return 1e100;
    return std::max(std::abs(sip(ctx, a, b)), std::abs(sip(ctx, b, a)));
  };

  const int grid = 2048;
  double best_theta = 0.0, best = 1e100;
  for (int i = 0; i < grid; ++i) {
    double theta = std::numbers::pi * i / grid;
    double r = score(theta);
    if (r < best) { best = r; best_theta = theta; }
  }
  double step = std::numbers::pi / grid;
  double theta = golden_min(score, best_theta - step, best_theta + step, 80);
  if (score(theta) > best) theta = best_theta;

  AuerbachResult res;
  res.residual = score(theta);
  make_pair(theta, res.a, res.b);
  res.ok = res.residual <= tol;
  return res;
}

NormalForm isometry_normal_form(const SipContext& ctx, const Mat& U, double tol) {
  SampleOptions opt;
  opt.samples = 100;
  opt.tol = 1e-6;
  if (!is_isometry(ctx, U, opt).verdict)
    throw InputError("isometry_normal_form: operator is not an isometry");
  return normal_form_common(ctx, U, tol);
}

NormalForm adjoint_abelian_normal_form(const SipContext& ctx, const Mat& A, double tol) {
  SampleOptions opt;
  opt.samples = 100;
  opt.tol = 1e-6;
  if (!is_adjoint_abelian(ctx, A, opt).verdict)
    throw InputError("adjoint_abelian_normal_form: operator is not adjoint abelian");
  return normal_form_common(ctx, A, tol);
}

Mat reconstruct(const NormalForm& nf) {
  Eigen::FullPivLU<Mat> lu(nf.P);
  if (!lu.isInvertible()) throw NumericError("reconstruct: singular basis matrix");
  return nf.P * block_diagonal(nf) * lu.inverse();
}

}  // namespace mink
