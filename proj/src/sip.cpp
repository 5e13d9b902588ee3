#include "minkit/sip.hpp"

#include <cmath>

namespace mink {

namespace {

double lp_rho(const NormModel& m, const Vec& x, const Vec& y) {
  // sum_i y_i |x_i|^{p-1} sgn(x_i) / ||x||^{p-2}
  const double p = m.p();
  double s = 0.0;
  for (int i = 0; i < x.size(); ++i)
    s += y[i] * std::pow(std::abs(x[i]), p - 1.0) * sgn(x[i]);
  return s / std::pow(m.norm(x), p - 2.0);
}

double rho_fd(const SipContext& ctx, const Vec& x, const Vec& y, double side) {
  const double nx2 = std::pow(ctx.model.norm(x), 2);
  const double h = side * ctx.fd_step * std::max(1.0, x.norm());
  auto g = [&](double t) {
    return (std::pow(ctx.model.norm(x + t * y), 2) - nx2) / (2.0 * t);
  };
  const double g1 = g(h), g2 = g(h / 2.0), g4 = g(h / 4.0);
  const double r1 = 2.0 * g2 - g1;
  const double r2 = 2.0 * g4 - g2;
  return (4.0 * r2 - r1) / 3.0;
}

double rho_closed(const SipContext& ctx, const Vec& x, const Vec& y, double side) {
  require(x.size() == ctx.model.dim() && y.size() == ctx.model.dim(),
          "rho: dimension mismatch");
  require_finite(x, "rho x");
  require_finite(y, "rho y");
  if (x.norm() == 0.0) return 0.0;
  switch (ctx.model.kind()) {
    case NormModel::Kind::Quadratic:
      return x.dot(ctx.model.G() * y);
    case NormModel::Kind::Lp:
      return lp_rho(ctx.model, x, y);
    case NormModel::Kind::Polytopal:
      return rho_fd(ctx, x, y, side);
  }
  return 0.0;
}

}  // namespace

double rho_plus(const SipContext& ctx, const Vec& x, const Vec& y) {
  return rho_closed(ctx, x, y, +1.0);
}

double rho_minus(const SipContext& ctx, const Vec& x, const Vec& y) {
  return rho_closed(ctx, x, y, -1.0);
}

double rho_plus_fd(const SipContext& ctx, const Vec& x, const Vec& y) {
  if (x.norm() == 0.0) return 0.0;
  return rho_fd(ctx, x, y, +1.0);
}

double rho_minus_fd(const SipContext& ctx, const Vec& x, const Vec& y) {
  if (x.norm() == 0.0) return 0.0;
  return rho_fd(ctx, x, y, -1.0);
}

double sip(const SipContext& ctx, const Vec& u, const Vec& v) {
  if (!ctx.model.classify().smooth)
    throw UnsupportedError("sip: model is not smooth (see classify)");
  return rho_plus(ctx, v, u);
}

Vec duality_map(const SipContext& ctx, const Vec& y) {
  if (!ctx.model.classify().smooth)
    throw UnsupportedError("duality_map: model is not smooth (see classify)");
  require(y.norm() > 0.0, "duality_map: y must be nonzero");
  const int n = ctx.model.dim();
  Vec c(n);
  for (int i = 0; i < n; ++i) {
    Vec e = Vec::Zero(n);
    e[i] = 1.0;
    c[i] = sip(ctx, e, y);
  }
  return c;
}

Vec riesz_representer(const SipContext& ctx, const Vec& c) {
  if (!ctx.model.classify().smooth)
    throw UnsupportedError("riesz_representer: model is not smooth");
  require(c.size() == ctx.model.dim(), "riesz_representer: dimension mismatch");
  require(c.norm() > 0.0, "riesz_representer: c must be nonzero");
  const NormModel& m = ctx.model;
  switch (m.kind()) {
    case NormModel::Kind::Quadratic:
      return m.G().ldlt().solve(c);
    case NormModel::Kind::Lp: {
      const double p = m.p();
      const double q = p / (p - 1.0);
      Vec w(c.size());
      for (int i = 0; i < c.size(); ++i)
        w[i] = sgn(c[i]) * std::pow(std::abs(c[i]), q - 1.0);
      double cq = 0.0;
      for (int i = 0; i < c.size(); ++i) cq += std::pow(std::abs(c[i]), q);
      const double scale = std::pow(cq, (p - 2.0) / p);  // = ||c||_q^{q(p-2)/p}
      return scale * w;
    }
    case NormModel::Kind::Polytopal:
      break;  // unreachable: not smooth
  }
  // Damped Newton on F(y) = duality_map(y) - c; generic smooth fallback.
  const int n = m.dim();
  Vec y = c;
  if (m.norm(y) == 0.0) y = Vec::Ones(n);
  double resid = 0.0;
  for (int step = 0; step < 200; ++step) {
    Vec F = duality_map(ctx, y) - c;
    resid = F.cwiseAbs().maxCoeff();
    if (resid <= 1e-9) return y;
    Mat J(n, n);
    const double h = 1e-6 * std::max(1.0, y.norm());
    for (int j = 0; j < n; ++j) {
      Vec yp = y;
      yp[j] += h;
      J.col(j) = (duality_map(ctx, yp) - F - c) / h;
    }
    Vec d = J.fullPivLu().solve(-F);
    double lambda = 1.0;
    while (lambda > 1e-6) {
      Vec cand = y + lambda * d;
      if (cand.norm() > 0.0 &&
          (duality_map(ctx, cand) - c).cwiseAbs().maxCoeff() < resid)
        break;
      lambda *= 0.5;
    }
    y += lambda * d;
  }
  if (resid > 1e-8)
    throw NumericError("riesz_representer: Newton stalled, residual " + std::to_string(resid));
  return y;
}

}  // namespace mink
