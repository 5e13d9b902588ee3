#include "minkit/reflect.hpp"

#include <cmath>
#include <numbers>

#include "minkit/operators.hpp"

namespace mink {

namespace {

constexpr double kPi = std::numbers::pi;

Vec plane_dir(double theta) {
  Vec d(2);
  d << std::cos(theta), std::sin(theta);
  return d;
}

// distance of q from the line through p0 with direction g (2-D cross product)
double line_offset(const Vec& p0, const Vec& g, const Vec& q) {
  Vec w = q - p0;
  return std::abs(g[0] * w[1] - g[1] * w[0]) / g.norm();
}

void verify_reflection_clauses(const NormModel& model, const AffineMap& map,
                               const LineSpec& G, double tol) {
  const int n = model.dim();
  Rng rng(42);
  const Vec g = G.directions.col(0);
  for (int k = 0; k < 50; ++k) {
    Vec p = 2.0 * gaussian_vector(n, rng);
    Vec p2 = map(p);
    Vec mid = 0.5 * (p + p2);
    // midpoint on G
    if (n == 2) {
      if (line_offset(G.point, g, mid) > 1e3 * tol)
        throw NumericError("left_reflection: midpoint off the axis");
    } else {
      // distance to the hyperplane via least squares onto its directions
      Vec r = mid - G.point;
      Vec coef = G.directions.colPivHouseholderQr().solve(r);
      if ((r - G.directions * coef).norm() > 1e3 * tol)
        throw NumericError("left_reflection: midpoint off the hyperplane");
    }
    if ((p - p2).norm() > 1e-9) {
      OrthoResult o = birkhoff(model, p - p2, g, 1e-7);
      if (n == 2 && !o.orthogonal)
        throw NumericError("left_reflection: displacement not Birkhoff-orthogonal to G");
    }
  }
  // involution
  AffineMap twice = compose({map, map});
  if ((twice.L - Mat::Identity(n, n)).norm() + twice.t.norm() > 1e3 * tol)
    throw NumericError("left_reflection: map is not involutory");
}

struct FixedLine {
  bool exists = false;
  LineSpec line;
};

// Fixed-point line of an involutory plane map with eigenvalues {1, -1}.
FixedLine fixed_line_of(const AffineMap& map, double tol) {
  FixedLine fl;
  Eigen::EigenSolver<Mat> es(map.L);
  int gi = -1;
  for (int i = 0; i < 2; ++i) {
    if (std::abs(es.eigenvalues()[i] - std::complex<double>(1.0, 0.0)) < 1e-6) gi = i;
  }
  if (gi < 0) return fl;
  Vec g = es.eigenvectors().col(gi).real();
  if (g.norm() < 1e-12) return fl;
  g.normalize();
  // any fixed point: (I - L) p = t, solved in least squares
  Mat M = Mat::Identity(2, 2) - map.L;
  Vec p0 = M.colPivHouseholderQr().solve(map.t);
  if ((M * p0 - map.t).norm() > std::max(tol, 1e-8) * (1.0 + map.t.norm())) return fl;
  fl.exists = true;
  fl.line = LineSpec{p0, g};
  return fl;
}

}  // namespace

LineSpec LineSpec::line(const Vec& point, const Vec& direction) {
  LineSpec spec;
  spec.point = point;
  spec.directions = Mat(direction.size(), 1);
  spec.directions.col(0) = direction;
  return spec;
}

AffineMap left_reflection(const NormModel& model2d, const LineSpec& G, double tol) {
  require(model2d.dim() == 2, "left_reflection: plane models only");
  if (!model2d.classify().strictly_convex)
    throw UnsupportedError("left_reflection: model is not strictly convex");
  require(G.directions.cols() == 1 && G.directions.rows() == 2,
          "left_reflection: G must be a line in the plane");
  const Vec g = G.directions.col(0);
  require(g.norm() > 0.0, "left_reflection: degenerate line direction");
  const Vec d = birkhoff_direction(model2d, g);

  Mat B(2, 2);
  B.col(0) = g;
  B.col(1) = d;
  Mat L = B * Eigen::Vector2d(1.0, -1.0).asDiagonal() * B.inverse();
  AffineMap map{L, G.point - L * G.point};
  verify_reflection_clauses(model2d, map, G, tol);
  return map;
}

AffineMap left_reflection_hyperplane(const NormModel& model, const LineSpec& G, double tol) {
  const int n = model.dim();
  require(n >= 3, "left_reflection_hyperplane: dimension must be >= 3");
  if (!model.classify().strictly_convex || !model.classify().smooth)
    throw UnsupportedError("left_reflection_hyperplane: smooth strictly convex models only");
  require(G.directions.rows() == n && G.directions.cols() == n - 1,
          "left_reflection_hyperplane: G must be a hyperplane");
  require(Eigen::FullPivLU<Mat>(G.directions).rank() == n - 1,
          "left_reflection_hyperplane: directions must be independent");

  // Birkhoff normal: d with ||d + h|| >= ||d|| for all h in the direction
  // space, i.e. the duality image of d annihilates the hyperplane.
  Eigen::FullPivLU<Mat> lu(G.directions.transpose());
  Mat ker = lu.kernel();
  Vec nu = ker.col(0).normalized();
  SipContext ctx(model);
  Vec d = riesz_representer(ctx, nu);
  d /= model.norm(d);

  // normal-cone check: t -> ||d + t h|| has its minimum at 0 on each direction
  for (int j = 0; j < n - 1; ++j) {
    Vec h = G.directions.col(j);
    OrthoResult o = birkhoff(model, d, h, 1e-7);
    if (!o.orthogonal)
      throw NumericError("left_reflection_hyperplane: normal-direction search failed, margin " +
                         std::to_string(o.margin));
  }

  Mat B(n, n);
  B.leftCols(n - 1) = G.directions;
  B.col(n - 1) = d;
  Vec diag = Vec::Ones(n);
  diag[n - 1] = -1.0;
  Mat L = B * diag.asDiagonal() * B.inverse();
  AffineMap map{L, G.point - L * G.point};
  verify_reflection_clauses(model, map, G, tol);
  return map;
}

AffineMap compose(const std::vector<AffineMap>& maps) {
  require(!maps.empty(), "compose: empty map list");
  AffineMap acc = maps.front();
  for (size_t i = 1; i < maps.size(); ++i) {
    const AffineMap& m = maps[i];
    acc = AffineMap{m.L * acc.L, m.L * acc.t + m.t};
  }
  return acc;
}

std::string to_string(MapClass c) {
  switch (c) {
    case MapClass::Identity: return "identity";
    case MapClass::Translation: return "translation";
    case MapClass::Shear: return "shear";
    case MapClass::LeftReflection: return "left-reflection";
    case MapClass::Isometry: return "isometry";
    case MapClass::General: return "general";
  }
  return "general";
}

MapClass classify_composition(const NormModel& model, const AffineMap& map, double tol) {
  const int n = model.dim();
  const Mat I = Mat::Identity(n, n);
  const bool linear_identity = (map.L - I).norm() <= tol;
  if (linear_identity && map.t.norm() <= tol) return MapClass::Identity;
  if (linear_identity) return MapClass::Translation;
  if ((map.L - I).norm() > tol && ((map.L - I) * (map.L - I)).norm() <= tol)
    return MapClass::Shear;
  if (n == 2 && model.classify().strictly_convex &&
      std::abs(map.L.determinant() + 1.0) <= 1e-6 && (map.L * map.L - I).norm() <= 1e-6) {
    FixedLine fl = fixed_line_of(map, tol);
    if (fl.exists) {
      // Definition check: displacement direction must be the Birkhoff
      // normal of the fixed line.
      Eigen::EigenSolver<Mat> es(map.L);
      for (int i = 0; i < 2; ++i) {
        if (std::abs(es.eigenvalues()[i] - std::complex<double>(-1.0, 0.0)) < 1e-6) {
          Vec d = es.eigenvectors().col(i).real();
          if (d.norm() > 1e-12 &&
              birkhoff(model, d, fl.line.directions.col(0), 1e-6).orthogonal)
            return MapClass::LeftReflection;
        }
      }
    }
  }
  SipContext ctx(model);
  SampleOptions opt;
  opt.samples = 100;
  opt.tol = std::max(tol, 1e-7);
  if (is_isometry(ctx, map.L, opt).verdict) return MapClass::Isometry;
  return MapClass::General;
}

BatteryReport euclidean_battery(const NormModel& model2d, int trials, double tol) {
  require(model2d.dim() == 2, "euclidean_battery: plane models only");
  if (!model2d.classify().strictly_convex)
    throw UnsupportedError("euclidean_battery: model is not strictly convex");
  BatteryReport rep;
  SipContext ctx(model2d);
  const Vec origin = Vec::Zero(2);

  auto axis_reflection = [&](double theta) {
    return left_reflection(model2d, LineSpec::line(origin, plane_dir(theta)), 1e-9);
  };

  {  // (a) products of two left reflections are isometries
    BatteryCriterion c{"two-reflection-isometry", true, 0.0, std::nullopt};
    SampleOptions opt;
    opt.samples = 60;
    opt.tol = tol;
    for (int i = 0; i < trials && c.pass; ++i) {
      double t1 = kPi * i / trials;
      double t2 = kPi * (i + 0.37) / trials + 0.3;
      AffineMap prod = compose({axis_reflection(t1), axis_reflection(t2)});
      auto r = is_isometry(ctx, prod.L, opt);
      c.defect = std::max(c.defect, r.max_residual);
      if (!r.verdict) {
        c.pass = false;
        c.witness = std::vector<double>{t1, t2};
      }
    }
    rep.criteria.push_back(c);
  }

  {  // (b) left reflections preserve James orthogonality
    BatteryCriterion c{"james-preservation", true, 0.0, std::nullopt};
    auto xs = model2d.unit_sphere_samples(trials, 11);
    for (int i = 0; i < trials && c.pass; ++i) {
      const Vec& x = xs[i];
      // find y on the unit circle with ||x+y|| = ||x-y|| by bisection
      auto f = [&](double theta) {
        Vec y = plane_dir(theta);
        y /= model2d.norm(y);
        return model2d.norm(x + y) - model2d.norm(x - y);
      };
      double base = std::atan2(x[1], x[0]);
      double lo = base + 0.1, hi = base + kPi - 0.1;
      if ((f(lo) > 0) == (f(hi) > 0)) continue;
      for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((f(mid) > 0) == (f(lo) > 0)) lo = mid;
        else hi = mid;
      }
      Vec y = plane_dir(0.5 * (lo + hi));
      y /= model2d.norm(y);
      double theta_line = kPi * (i + 0.21) / trials;
      AffineMap psi = axis_reflection(theta_line);
      double defect = std::abs(model2d.norm(psi.L * (x + y)) - model2d.norm(psi.L * (x - y)));
      c.defect = std::max(c.defect, defect);
      if (defect > tol) {
        c.pass = false;
        c.witness = std::vector<double>{x[0], x[1], y[0], y[1], theta_line};
      }
    }
    rep.criteria.push_back(c);
  }

  {  // (c) image of the unit circle under a non-axis left reflection
    BatteryCriterion c{"circle-image", true, 0.0, std::nullopt};
    AffineMap psi = axis_reflection(kPi / 5.0);
    auto xs = model2d.unit_sphere_samples(256, 17);
    double sum = 0.0;
    std::vector<double> radii;
    for (const Vec& x : xs) {
      radii.push_back(model2d.norm(psi.L * x));
      sum += radii.back();
    }
    double mean = sum / radii.size();  // least-squares radius
    for (double r : radii) c.defect = std::max(c.defect, std::abs(r - mean));
    if (c.defect > tol) {
      c.pass = false;
      c.witness = std::vector<double>{kPi / 5.0};
    }
    rep.criteria.push_back(c);
  }

  {  // (d) three concurrent reflections compose to a fourth
    BatteryCriterion c{"three-reflections", true, 0.0, std::nullopt};
    double t1 = 0.3, t2 = 1.1, t3 = 2.0;
    AffineMap prod = compose({axis_reflection(t1), axis_reflection(t2), axis_reflection(t3)});
    auto disk = model2d.unit_sphere_samples(64, 23);
    auto defect_for = [&](double theta) {
      AffineMap cand = axis_reflection(theta);
      double worst = 0.0;
      for (const Vec& x : disk)
        worst = std::max(worst, (prod.L * x - cand.L * x).norm());
      return worst;
    };
    double best = 1e100, best_theta = 0.0;
    const int grid = 2048;
    for (int i = 0; i < grid; ++i) {
      double theta = kPi * i / grid;
      double dft = defect_for(theta);
      if (dft < best) { best = dft; best_theta = theta; }
    }
    // golden polish around the grid winner
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = best_theta - kPi / grid, b = best_theta + kPi / grid;
    double p = b - gr * (b - a), q = a + gr * (b - a);
    double fp = defect_for(p), fq = defect_for(q);
    for (int it = 0; it < 40; ++it) {
      if (fp < fq) { b = q; q = p; fq = fp; p = b - gr * (b - a); fp = defect_for(p); }
      else { a = p; p = q; fp = fq; q = a + gr * (b - a); fq = defect_for(q); }
    }
    c.defect = std::min(best, std::min(fp, fq));
    if (c.defect > tol) {
      c.pass = false;
      c.witness = std::vector<double>{t1, t2, t3};
    }
    rep.criteria.push_back(c);
  }

  rep.all_pass = true;
  for (const auto& c : rep.criteria) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

ProbeReport birkhoff_preservation_probe(const NormModel& model2d, int trials, double tol) {
  require(model2d.dim() == 2, "birkhoff_preservation_probe: plane models only");
  auto cls = model2d.classify();
  if (!cls.strictly_convex || !cls.smooth)
    throw UnsupportedError("birkhoff_preservation_probe: smooth strictly convex planes only");
  SipContext ctx(model2d);
  ProbeReport rep;
  rep.trials = trials;
  auto xs = model2d.unit_sphere_samples(trials, 29);
  int kept = 0, preserved = 0;
  const Vec origin = Vec::Zero(2);
  for (int i = 0; i < trials; ++i) {
    const Vec& x = xs[i];
    // x |_B y: y spans the kernel of the duality image of x
    Vec c = duality_map(ctx, x);
    Vec y(2);
    y << -c[1], c[0];
    if (y.norm() < 1e-12) continue;
    y /= model2d.norm(y);
    double theta = kPi * (i + 0.43) / trials;
    AffineMap psi = left_reflection(model2d, LineSpec::line(origin, plane_dir(theta)), 1e-9);
    ++kept;
    if (birkhoff(model2d, psi.L * x, psi.L * y, std::max(tol, 1e-7)).orthogonal) {
      ++preserved;
    } else if (!rep.counterexample) {
      rep.counterexample = std::vector<double>{x[0], x[1], y[0], y[1], theta};
    }
  }
  rep.rate = kept > 0 ? static_cast<double>(preserved) / kept : 0.0;
  return rep;
}

}  // namespace mink
