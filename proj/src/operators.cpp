#include "minkit/operators.hpp"

#include <cmath>
#include <functional>

namespace mink {

namespace {

// 500 random pairs plus every ordered basis pair; basis pairs catch
// axis-aligned failures random sampling misses in l_p.
std::vector<std::pair<Vec, Vec>> sample_pairs(const NormModel& m, const SampleOptions& opt) {
  std::vector<std::pair<Vec, Vec>> pairs;
  const int n = m.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec ei = Vec::Zero(n), ej = Vec::Zero(n);
      ei[i] = 1.0;
      ej[j] = 1.0;
      pairs.emplace_back(ei, ej);
    }
  }
  auto xs = m.unit_sphere_samples(opt.samples, opt.seed);
  auto ys = m.unit_sphere_samples(opt.samples, opt.seed + 1);
  for (int k = 0; k < opt.samples; ++k) pairs.emplace_back(xs[k], ys[k]);
  return pairs;
}

PredicateReport reduce_report(const std::vector<std::pair<Vec, Vec>>& pairs,
                              const std::function<double(const Vec&, const Vec&)>& resid,
                              double tol) {
  PredicateReport rep;
  rep.samples = static_cast<int>(pairs.size());
  for (const auto& [x, y] : pairs) {
    double r = resid(x, y);
    if (r > rep.max_residual) {
      rep.max_residual = r;
      rep.witness = Witness{x, y};
    }
  }
  rep.verdict = rep.max_residual <= tol;
  if (rep.verdict) rep.witness.reset();
  return rep;
}

}  // namespace

Vec gen_adjoint_apply(const SipContext& ctx, const Mat& A, const Vec& y) {
  if (!ctx.model.classify().smooth)
    throw UnsupportedError("gen_adjoint_apply: model is not smooth");
  require(A.rows() == ctx.model.dim() && A.cols() == ctx.model.dim(),
          "gen_adjoint_apply: operator dimension mismatch");
  require(y.norm() > 0.0, "gen_adjoint_apply: y must be nonzero");
  const int n = ctx.model.dim();
  Vec c(n);
  for (int i = 0; i < n; ++i) c[i] = sip(ctx, A.col(i), y);
  if (c.norm() == 0.0) return Vec::Zero(n);
  return riesz_representer(ctx, c);
}

PredicateReport is_self_adjoint(const SipContext& ctx, const Mat& A, const SampleOptions& opt) {
  auto pairs = sample_pairs(ctx.model, opt);
  return reduce_report(pairs, [&](const Vec& x, const Vec& y) {
    return std::abs(rho_plus(ctx, A * x, y) - rho_plus(ctx, x, A * y));
  }, opt.tol);
}

PredicateReport is_adjoint_abelian(const SipContext& ctx, const Mat& A, const SampleOptions& opt) {
  if (!ctx.model.classify().smooth)
    throw UnsupportedError("is_adjoint_abelian: model is not smooth");
  auto pairs = sample_pairs(ctx.model, opt);
  return reduce_report(pairs, [&](const Vec& x, const Vec& y) {
    return std::abs(sip(ctx, A * x, y) - sip(ctx, x, A * y));
  }, opt.tol);
}

PredicateReport is_isometry(const SipContext& ctx, const Mat& U, const SampleOptions& opt) {
  const bool smooth = ctx.model.classify().smooth;
  auto pairs = sample_pairs(ctx.model, opt);
  return reduce_report(pairs, [&](const Vec& x, const Vec& y) {
    double r = std::abs(ctx.model.norm(U * x) - ctx.model.norm(x));
    if (smooth) r = std::max(r, std::abs(sip(ctx, U * x, U * y) - sip(ctx, x, y)));
    return r;
  }, opt.tol);
}

PredicateReport iso_abelian_check(const SipContext& ctx, const Mat& U, const SampleOptions& opt) {
  if (!ctx.model.classify().smooth)
    throw UnsupportedError("iso_abelian_check: model is not smooth");
  Eigen::JacobiSVD<Mat> svd(U);
  require(svd.singularValues().minCoeff() > 0.0 &&
              svd.singularValues().maxCoeff() / svd.singularValues().minCoeff() < 1e12,
          "iso_abelian_check: U is singular or near-singular");
  Mat Uinv = U.inverse();
  auto ys = ctx.model.unit_sphere_samples(std::max(opt.samples / 10, 10), opt.seed + 7);
  std::vector<std::pair<Vec, Vec>> pairs;
  for (const Vec& y : ys) pairs.emplace_back(y, y);
  auto rep = reduce_report(pairs, [&](const Vec&, const Vec& y) {
    return (Uinv * y - gen_adjoint_apply(ctx, U, y)).cwiseAbs().maxCoeff();
  }, opt.tol);
  return rep;
}

PredicateReport adjoint_algebra_check(const SipContext& ctx, const Mat& A, const Mat& B,
                                      double lambda, const SampleOptions& opt) {
  if (!ctx.model.classify().smooth)
    throw UnsupportedError("adjoint_algebra_check: model is not smooth");
  auto ys = ctx.model.unit_sphere_samples(std::max(opt.samples / 10, 10), opt.seed + 13);
  std::vector<std::pair<Vec, Vec>> pairs;
  for (const Vec& y : ys) pairs.emplace_back(y, y);
  return reduce_report(pairs, [&](const Vec&, const Vec& y) {
    double r1 = 0.0, r2 = 0.0;
    Vec aty = gen_adjoint_apply(ctx, A, y);
    if (aty.norm() > 0.0) {
      Vec lhs = gen_adjoint_apply(ctx, A * B, y);
      Vec rhs = gen_adjoint_apply(ctx, B, aty);
      r1 = (lhs - rhs).cwiseAbs().maxCoeff();
    }
    if (lambda != 0.0) {
      Vec lhs = gen_adjoint_apply(ctx, lambda * A, y);
      r2 = (lhs - lambda * aty).cwiseAbs().maxCoeff();
    }
    return std::max(r1, r2);
  }, opt.tol);
}

double lp_sign_function(double p, double tan_phi, int branch) {
  require(p > 1.0 && p <= 100.0, "lp_sign_function: p must lie in (1, 100]");
  require(std::isfinite(tan_phi), "lp_sign_function: tan(phi) not finite");
  const double t = tan_phi;
  if (branch == 1) {
    return std::pow(1.0 + std::pow(t, p), (p - 2.0) / p) * (1.0 + t) - 1.0 +
           std::pow(t, p - 1.0);
  }
  if (branch == 2) {
    const double a = std::abs(t);
    require(a < 1.0, "lp_sign_function: branch 2 requires |tan phi| < 1");
    return 1.0 + std::pow(a, p - 1.0) -
           std::pow(1.0 + std::pow(a, p), (p - 2.0) / p) * (1.0 - a);
  }
  throw InputError("lp_sign_function: branch must be 1 or 2");
}

LpScanTable lp_rotation_scan(const std::vector<double>& p_grid,
                             const std::vector<double>& tan_phi_grid) {
  require(!p_grid.empty() && !tan_phi_grid.empty(), "lp_rotation_scan: empty grid");
  LpScanTable table;
  for (double p : p_grid) {
    for (double t : tan_phi_grid) {
      double f1 = lp_sign_function(p, t, 1);
      table.rows.push_back({p, t, 1, f1});
      if (f1 <= 0.0) table.all_positive = false;
      if (std::abs(t) < 1.0) {
        double f2 = lp_sign_function(p, t, 2);
        table.rows.push_back({p, t, 2, f2});
        if (f2 <= 0.0) table.all_positive = false;
      }
    }
  }
  return table;
}

}  // namespace mink
