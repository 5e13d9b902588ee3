#include "minkit/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "minkit/ellipsoid.hpp"

namespace mink {

namespace {

int find_match(const std::vector<Vec>& pts, const Vec& x, double tol) {
  for (size_t i = 0; i < pts.size(); ++i)
    if ((pts[i] - x).cwiseAbs().maxCoeff() <= tol) return static_cast<int>(i);
  return -1;
}

bool maps_vertex_set(const Mat& U, const std::vector<Vec>& V, double tol) {
  std::vector<bool> hit(V.size(), false);
  for (const Vec& v : V) {
    int j = find_match(V, U * v, tol);
    if (j < 0 || hit[j]) return false;
    hit[j] = true;
  }
  return true;
}

bool contains_matrix(const std::vector<Mat>& mats, const Mat& M, double tol) {
  for (const Mat& A : mats)
    if ((A - M).cwiseAbs().maxCoeff() <= tol) return true;
  return false;
}

GroupClassification classify_plane_group(const std::vector<Mat>& elements) {
  GroupClassification c;
  int rotations = 0, reflections = 0;
  for (const Mat& U : elements) {
    if (U.determinant() > 0.0) ++rotations;
    else ++reflections;
  }
  if (reflections == 0) {
    c.kind = GroupClassification::Kind::Cyclic;
    c.k = rotations;
  } else {
    c.kind = GroupClassification::Kind::Dihedral;
    c.k = rotations;
  }
  return c;
}

}  // namespace

std::string GroupClassification::label() const {
  switch (kind) {
    case Kind::Cyclic: return "cyclic(" + std::to_string(k) + ")";
    case Kind::Dihedral: return "dihedral(" + std::to_string(k) + ")";
    case Kind::FiniteOther: return "finite-other";
    case Kind::InfiniteDetected: return "infinite-detected";
  }
  return "finite-other";
}

PointGroup polytopal_isometry_group(const std::vector<Vec>& V, double tol) {
  require(V.size() >= 2 && V.size() <= 200, "isometry group: vertex count out of range");
  const int n = static_cast<int>(V.front().size());
  require(n >= 2 && n <= 4, "isometry group: dimension 2..4 only");
  NormModel model = NormModel::polytopal(V);  // validates symmetry and extremality
  const int k = static_cast<int>(V.size());

  // normalize by the Loewner ellipsoid so candidate symmetries become
  // near-orthogonal maps (used only for pruning; acceptance is the exact
  // vertex permutation in the original frame)
  Ellipsoid E = lowner(V, 1e-8);
  Eigen::LLT<Mat> llt(E.S);
  Mat T = llt.matrixU();
  std::vector<Vec> W(V.size());
  for (size_t i = 0; i < V.size(); ++i) W[i] = T * V[i];

  // fingerprints: normalized norm plus sorted distance multiset
  std::vector<double> norms(k);
  std::vector<std::vector<double>> dists(k);
  for (int i = 0; i < k; ++i) {
    norms[i] = W[i].norm();
    for (int j = 0; j < k; ++j) dists[i].push_back((W[i] - W[j]).norm());
    std::sort(dists[i].begin(), dists[i].end());
  }
  auto fingerprint_match = [&](int i, int j) {
    if (std::abs(norms[i] - norms[j]) > 1e-6) return false;
    for (int t = 0; t < k; ++t)
      if (std::abs(dists[i][t] - dists[j][t]) > 1e-6) return false;
    return true;
  };

  // reference tuple: greedy volume-maximizing linearly independent vertices
  std::vector<int> ref;
  Mat R(n, n);
  for (int depth = 0; depth < n; ++depth) {
    int best = -1;
    double best_vol = -1.0;
    for (int i = 0; i < k; ++i) {
      if (std::find(ref.begin(), ref.end(), i) != ref.end()) continue;
      Mat cand(n, depth + 1);
      for (int d = 0; d < depth; ++d) cand.col(d) = W[ref[d]];
      cand.col(depth) = W[i];
      double vol = std::sqrt((cand.transpose() * cand).determinant());
      if (vol > best_vol) { best_vol = vol; best = i; }
    }
    require(best >= 0 && best_vol > 1e-12, "isometry group: vertices degenerate");
    ref.push_back(best);
    R.col(depth) = W[best];
  }
  Mat Rinv = R.inverse();
  Mat Rorig(n, n);
  for (int d = 0; d < n; ++d) Rorig.col(d) = V[ref[d]];
  Mat Rorig_inv = Rorig.inverse();

  // candidate images per reference slot, pruned by fingerprint
  std::vector<std::vector<int>> cands(n);
  double count = 1.0;
  for (int d = 0; d < n; ++d) {
    for (int i = 0; i < k; ++i)
      if (fingerprint_match(ref[d], i)) cands[d].push_back(i);
    count *= cands[d].size();
  }
  if (count > 1e6) throw ResourceError("isometry group: candidate tuple count exceeds 1e6");

  std::vector<Mat> elements;
  std::vector<int> pick(n);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == n) {
      Mat C(n, n);
      for (int d = 0; d < n; ++d) C.col(d) = W[pick[d]];
      Mat M = C * Rinv;
      if ((M.transpose() * M - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-5) return;
      // exact certificate in the original frame
      Mat Corig(n, n);
      for (int d = 0; d < n; ++d) Corig.col(d) = V[pick[d]];
      Mat U = Corig * Rorig_inv;
      if (!maps_vertex_set(U, V, tol)) return;
      if (!contains_matrix(elements, U, tol)) elements.push_back(U);
      return;
    }
    for (int c : cands[depth]) {
      // incremental Gram pruning against the reference tuple
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        if (std::abs(W[pick[d]].dot(W[c]) - W[ref[d]].dot(W[ref[depth]])) > 1e-5) ok = false;
        if (c == pick[d]) ok = false;
      }
      if (!ok) continue;
      pick[depth] = c;
      rec(depth + 1);
    }
  };
  rec(0);

  PointGroup g;
  g.elements = std::move(elements);
  g.order = static_cast<int>(g.elements.size());

  // closure, identity, inverses
  g.closure_verified = contains_matrix(g.elements, Mat::Identity(n, n), 1e-7) &&
                       contains_matrix(g.elements, -Mat::Identity(n, n), 1e-7);
  for (const Mat& A : g.elements) {
    if (!g.closure_verified) break;
    if (!contains_matrix(g.elements, A.inverse(), 1e-7)) g.closure_verified = false;
    for (const Mat& B : g.elements)
      if (!contains_matrix(g.elements, A * B, 1e-7)) { g.closure_verified = false; break; }
  }
  if (!g.closure_verified)
    throw NumericError("isometry group: closure verification failed (internal error)");

  if (n == 2) g.classification = classify_plane_group(g.elements);
  else g.classification.kind = GroupClassification::Kind::FiniteOther;
  return g;
}

GroupReport group_report(const NormModel& model, double tol) {
  GroupReport rep;
  if (model.kind() == NormModel::Kind::Quadratic) {
    rep.finite = false;
    rep.classification.kind = GroupClassification::Kind::InfiniteDetected;
    rep.note = "one-parameter family of rotations preserving the quadratic form; "
               "infinitude is structural, not an enumeration timeout";
    return rep;
  }
  if (model.kind() != NormModel::Kind::Polytopal)
    throw UnsupportedError("group_report: only polytopal (enumerable) and quadratic models");
  rep.point_group = polytopal_isometry_group(model.vertices(), tol);
  rep.finite = true;
  rep.classification = rep.point_group.classification;
  for (const Mat& U : rep.point_group.elements) rep.determinants.push_back(U.determinant());
  return rep;
}

std::vector<Vec> orbit_probe(const NormModel& model, const Vec& x, const PointGroup& group) {
  require(group.closure_verified, "orbit_probe: group closure not verified");
  require(x.size() == model.dim(), "orbit_probe: dimension mismatch");
  std::vector<Vec> orbit;
  for (const Mat& U : group.elements) {
    Vec y = U * x;
    if (find_match(orbit, y, 1e-9) < 0) orbit.push_back(y);
  }
  return orbit;
}

}  // namespace mink
