#include "minkit/ellipsoid.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace mink {

namespace {

constexpr double kPi = std::numbers::pi;

bool cloud_is_symmetric(const std::vector<Vec>& pts) {
  for (const Vec& p : pts) {
    bool found = false;
    for (const Vec& q : pts) {
      if ((p + q).norm() <= 1e-9 * (1.0 + p.norm())) { found = true; break; }
    }
    if (!found) return false;
  }
  return true;
}

// Frank-Wolfe ascent with away steps on  max log det sum u_i q_i q_i^T
// over the simplex; shared by the centered and lifted formulations.
Vec mvee_weights(const Mat& Q, double eps, int max_iter) {
  const int d = static_cast<int>(Q.rows());
  const int m = static_cast<int>(Q.cols());
  Vec u = Vec::Constant(m, 1.0 / m);
  Vec M(m);
  for (int iter = 0; iter < max_iter; ++iter) {
    Mat X = Q * u.asDiagonal() * Q.transpose();
    Mat Xinv = X.inverse();
    for (int i = 0; i < m; ++i) M[i] = Q.col(i).dot(Xinv * Q.col(i));
    int jp = 0, jm = -1;
    for (int i = 1; i < m; ++i)
      if (M[i] > M[jp]) jp = i;
    for (int i = 0; i < m; ++i)
      if (u[i] > 1e-12 && (jm < 0 || M[i] < M[jm])) jm = i;
    const double up_gap = M[jp] / d - 1.0;
    const double down_gap = 1.0 - M[jm] / d;
    if (up_gap <= eps && down_gap <= eps) return u;
    if (up_gap >= down_gap) {
      double lam = (M[jp] / d - 1.0) / (M[jp] - 1.0);
      u *= (1.0 - lam);
      u[jp] += lam;
    } else {
      double lam = (M[jm] / d - 1.0) / (M[jm] - 1.0);  // negative
      lam = std::max(lam, -u[jm] / (1.0 - u[jm]));
      u *= (1.0 - lam);
      u[jm] += lam;
    }
  }
  throw NumericError("lowner: Khachiyan ascent did not converge within the iteration cap");
}

std::vector<Vec> fibonacci_sphere(int m) {
  std::vector<Vec> dirs;
  const double ga = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < m; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / m;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = ga * i;
    Vec d(3);
    d << r * std::cos(phi), r * std::sin(phi), z;
    dirs.push_back(d);
  }
  return dirs;
}

std::vector<Vec> sample_directions(int dim, int m) {
  std::vector<Vec> dirs;
  if (dim == 2) {
    for (int i = 0; i < m; ++i) {
      Vec d(2);
      d << std::cos(kPi * 2.0 * i / m), std::sin(kPi * 2.0 * i / m);
      dirs.push_back(d);
    }
  } else if (dim == 3) {
    dirs = fibonacci_sphere(m);
  } else {
    Rng rng(99);
    for (int i = 0; i < m; ++i) dirs.push_back(gaussian_vector(dim, rng).normalized());
  }
  return dirs;
}

}  // namespace

Ellipsoid lowner(const std::vector<Vec>& points, double eps) {
  require(!points.empty(), "lowner: empty point cloud");
  const int n = static_cast<int>(points.front().size());
  Mat P(n, static_cast<int>(points.size()));
  for (size_t j = 0; j < points.size(); ++j) {
    require(points[j].size() == n, "lowner: ragged point cloud");
    P.col(static_cast<int>(j)) = points[j];
  }
  require(Eigen::FullPivLU<Mat>(P).rank() == n, "lowner: degenerate (rank-deficient) cloud");

  const int cap = 100000;
  Ellipsoid E;
  if (cloud_is_symmetric(points)) {
    Vec u = mvee_weights(P, eps, cap);
    Mat X = P * u.asDiagonal() * P.transpose();
    E.center = Vec::Zero(n);
    E.S = X.inverse() / n;
  } else {
    Mat Q(n + 1, P.cols());
    Q.topRows(n) = P;
    Q.row(n).setOnes();
    Vec u = mvee_weights(Q, eps, cap);
    Vec c = P * u;
    Mat X = P * u.asDiagonal() * P.transpose() - c * c.transpose();
    E.center = c;
    E.S = X.inverse() / n;
  }
  return E;
}

std::vector<Vec> polar_polytope_vertices(const std::vector<Vec>& V, double tol) {
  require(!V.empty(), "polar vertices: empty vertex set");
  const int n = static_cast<int>(V.front().size());
  const int k = static_cast<int>(V.size());
  require(n >= 2 && n <= 4, "polar vertices: dimension 2..4 only");
  std::vector<Vec> out;
  std::vector<int> idx(n);
  // all n-subsets of the facet candidates v.x = 1
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      Mat A(n, n);
      for (int r = 0; r < n; ++r) A.row(r) = V[idx[r]].transpose();
      Eigen::FullPivLU<Mat> lu(A);
      if (!lu.isInvertible()) return;
      Vec x = lu.solve(Vec::Ones(n));
      for (const Vec& v : V)
        if (v.dot(x) > 1.0 + tol) return;
      for (const Vec& w : out)
        if ((w - x).norm() <= 1e-8 * (1.0 + x.norm())) return;
      out.push_back(x);
      return;
    }
    for (int i = start; i <= k - (n - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  require(!out.empty(), "polar vertices: enumeration found none");
  return out;
}

Ellipsoid john(const NormModel& model, double eps) {
  const int n = model.dim();
  if (model.kind() == NormModel::Kind::Quadratic) {
    return Ellipsoid{Vec::Zero(n), model.G()};  // the body is its own John ellipsoid
  }
  std::vector<Vec> polar_cloud;
  if (model.kind() == NormModel::Kind::Polytopal && model.vertices().size() <= 40 && n <= 4) {
    polar_cloud = polar_polytope_vertices(model.vertices());
  } else {
    const int m = (n == 2) ? 1024 : 4096;
    for (const Vec& u : sample_directions(n, m)) {
      double dn = model.dual_norm(u);
      if (dn <= 1e-12) throw NumericError("john: degenerate polar sample");
      polar_cloud.push_back(u / dn);
      polar_cloud.push_back(-u / dn);
    }
  }
  Ellipsoid polar_lowner = lowner(polar_cloud, eps);
  Ellipsoid E;
  E.center = Vec::Zero(n);
  E.S = polar_lowner.S.inverse();  // polar of a centered ellipsoid
  return E;
}

std::vector<Vec> contact_points(const NormModel& model, const Ellipsoid& E, double tol,
                                int samples) {
  const int n = model.dim();
  std::vector<Vec> contacts;
  for (const Vec& u : sample_directions(n, samples)) {
    double nm = model.norm(u);
    if (nm <= 1e-12) continue;
    Vec x = u / nm;
    if (std::abs(E.gauge(x) - 1.0) <= tol) contacts.push_back(x);
  }
  // cluster to distinct representatives by angular proximity; keep the
  // member closest to the ellipsoid boundary as the representative
  const double ang_tol = 0.03;
  std::vector<Vec> reps;
  std::vector<double> rep_err;
  for (const Vec& x : contacts) {
    double err = std::abs(E.gauge(x) - 1.0);
    bool close = false;
    for (size_t i = 0; i < reps.size(); ++i) {
      double c = x.normalized().dot(reps[i].normalized());
      if (std::acos(std::clamp(c, -1.0, 1.0)) <= ang_tol) {
        if (err < rep_err[i]) { reps[i] = x; rep_err[i] = err; }
        close = true;
        break;
      }
    }
    if (!close) {
      reps.push_back(x);
      rep_err.push_back(err);
    }
  }
  // pair with antipodes
  size_t base = reps.size();
  for (size_t i = 0; i < base; ++i) {
    bool found = false;
    for (const Vec& r : reps)
      if ((reps[i] + r).norm() <= 1e-6) { found = true; break; }
    if (!found) reps.push_back(-reps[i]);
  }
  return reps;
}

std::vector<Vec> remark_body_samples(int n, double eps, int m) {
  require(n >= 3, "remark body: polygon needs n >= 3");
  require(eps > 0.0, "remark body: eps must be positive");
  require(m >= 100, "remark body: need at least 100 samples");
  // regular 2n-gon in the z = 0 plane circumscribed about the circle of
  // radius (1 + eps): vertices at radius (1 + eps) / cos(pi / (2n))
  const double R = (1.0 + eps) / std::cos(kPi / (2.0 * n));
  std::vector<Vec> poly;
  for (int k = 0; k < 2 * n; ++k) {
    Vec v(3);
    v << R * std::cos(kPi * k / n), R * std::sin(kPi * k / n), 0.0;
    poly.push_back(v);
  }
  std::vector<Vec> out;
  auto push_unique = [&](const Vec& x) {
    for (const Vec& w : out)
      if ((w - x).norm() <= 1e-10) return;
    out.push_back(x);
  };
  // support argmax over {ball} U {polygon vertices}; antipodal pairs keep
  // the sampled body centrally symmetric
  for (const Vec& u : fibonacci_sphere((m + 1) / 2)) {
    double ball = u.norm();
    double best = ball;
    int best_k = -1;
    for (int k = 0; k < 2 * n; ++k) {
      double s = poly[k].dot(u);
      if (s > best) { best = s; best_k = k; }
    }
    Vec x = (best_k < 0) ? Vec(u / u.norm()) : poly[best_k];
    push_unique(x);
    push_unique(-x);
  }
  return out;
}

}  // namespace mink
