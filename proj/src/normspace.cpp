#include "minkit/normspace.hpp"

#include <algorithm>
#include <cmath>

#include "minkit/simplex.hpp"

namespace mink {

namespace {

constexpr double kPMin = 1.01;
constexpr double kPMax = 100.0;

}  // namespace

NormModel NormModel::lp(double p, int dim) {
  require(dim >= 1, "Lp: dimension must be positive");
  require(p >= kPMin && p <= kPMax, "Lp: p must lie in [1.01, 100]");
  NormModel m;
  m.kind_ = Kind::Lp;
  m.dim_ = dim;
  m.p_ = p;
  return m;
}

NormModel NormModel::quadratic(const Mat& G) {
  require(G.rows() == G.cols() && G.rows() >= 1, "Quadratic: G must be square");
  require_finite(G, "Quadratic G");
  require((G - G.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + G.cwiseAbs().maxCoeff()),
          "Quadratic: G must be symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(G);
  require(es.eigenvalues().minCoeff() > 0.0, "Quadratic: G must be positive definite");
  NormModel m;
  m.kind_ = Kind::Quadratic;
  m.dim_ = static_cast<int>(G.rows());
  m.G_ = 0.5 * (G + G.transpose());
  return m;
}

NormModel NormModel::polytopal(const std::vector<Vec>& vertices) {
  require(!vertices.empty(), "Polytopal: empty vertex set");
  const int n = static_cast<int>(vertices.front().size());
  Mat V(n, static_cast<int>(vertices.size()));
  for (size_t j = 0; j < vertices.size(); ++j) {
    require(vertices[j].size() == n, "Polytopal: ragged vertex list");
    require_finite(vertices[j], "Polytopal vertex");
    V.col(static_cast<int>(j)) = vertices[j];
  }
  // central symmetry: every vertex has its antipode in the set
  for (const Vec& v : vertices) {
    bool found = false;
    for (const Vec& w : vertices) {
      if ((v + w).norm() <= 1e-9 * (1.0 + v.norm())) { found = true; break; }
    }
    require(found, "Polytopal: vertex set is not centrally symmetric");
  }
  require(Eigen::FullPivLU<Mat>(V).rank() == n, "Polytopal: vertices do not span the space");
  // extremality: no vertex inside the hull of the others (skipped for large
  // sampled clouds where the LP battery would dominate construction cost)
  if (vertices.size() <= 64) {
    const int k = static_cast<int>(vertices.size());
    for (int j = 0; j < k; ++j) {
      Mat A(n + 1, k - 1);
      Vec b(n + 1);
      int col = 0;
      for (int i = 0; i < k; ++i) {
        if (i == j) continue;
        A.block(0, col, n, 1) = V.col(i);
        A(n, col) = 1.0;
        ++col;
      }
      b.head(n) = V.col(j);
      b[n] = 1.0;
      require(!lp::feasible(A, b), "Polytopal: vertex inside the hull of the others");
    }
  }
  NormModel m;
  m.kind_ = Kind::Polytopal;
  m.dim_ = n;
  m.vertices_ = vertices;
  return m;
}

double NormModel::polytopal_gauge(const Vec& x) const {
  if (x.norm() == 0.0) return 0.0;
  // gauge = min sum(lambda) s.t. V lambda = x, lambda >= 0
  const int n = dim_;
  const int k = static_cast<int>(vertices_.size());
  Mat A(n, k);
  for (int j = 0; j < k; ++j) A.col(j) = vertices_[j];
  auto sol = lp::solve_equality_form(A, x, Vec::Ones(k));
  if (!sol) throw NumericError("Polytopal gauge: infeasible (vertex set does not span)");
  return sol->objective;
}

double NormModel::norm(const Vec& x) const {
  require(x.size() == dim_, "norm: dimension mismatch");
  require_finite(x, "norm argument");
  switch (kind_) {
    case Kind::Lp: {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) s += std::pow(std::abs(x[i]), p_);
      return std::pow(s, 1.0 / p_);
    }
    case Kind::Quadratic:
      return std::sqrt(x.dot(G_ * x));
    case Kind::Polytopal:
      return polytopal_gauge(x);
  }
  return 0.0;
}

double NormModel::dual_norm(const Vec& u) const {
  require(u.size() == dim_, "dual_norm: dimension mismatch");
  switch (kind_) {
    case Kind::Lp: {
      double q = p_ / (p_ - 1.0);
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) s += std::pow(std::abs(u[i]), q);
      return std::pow(s, 1.0 / q);
    }
    case Kind::Quadratic:
      return std::sqrt(u.dot(G_.ldlt().solve(u)));
    case Kind::Polytopal: {
      double best = 0.0;
      for (const Vec& v : vertices_) best = std::max(best, std::abs(u.dot(v)));
      return best;
    }
  }
  return 0.0;
}

SpaceClassification NormModel::classify() const {
  if (kind_ == Kind::Polytopal) return {false, false};
  return {true, true};
}

std::vector<Vec> NormModel::unit_sphere_samples(int m, std::uint64_t seed) const {
  require(m >= 1, "unit_sphere_samples: m must be >= 1");
  Rng rng(seed);
  std::vector<Vec> out;
  out.reserve(m);
  while (static_cast<int>(out.size()) < m) {
    Vec g = gaussian_vector(dim_, rng);
    double n = norm(g);
    if (n < 1e-8) continue;
    out.push_back(g / n);
  }
  if (dim_ == 2) {
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
      return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
    });
  }
  return out;
}

}  // namespace mink
