#include "minkit/ortho.hpp"

#include <cmath>
#include <numbers>

namespace mink {

OrthoResult birkhoff(const NormModel& model, const Vec& x, const Vec& y, double tol) {
  require(x.norm() > 0.0 && y.norm() > 0.0, "birkhoff: arguments must be nonzero");
  SipContext ctx(model);
  const double nx = model.norm(x), ny = model.norm(y);
  const double bracket = 10.0 * nx / ny;

  // coarse golden-section bracket of the convex map t -> ||x + t y||
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = -bracket, b = bracket;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = model.norm(x + c * y), fd = model.norm(x + d * y);
  for (int i = 0; i < 60; ++i) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - gr * (b - a); fc = model.norm(x + c * y);
    } else {
      a = c; c = d; fc = fd;
      d = a + gr * (b - a); fd = model.norm(x + d * y);
    }
  }
  // polish on the one-sided derivative: t* = inf { t : rho'_+(x+ty, y) >= 0 }
  double lo = a - 1e-3 * bracket, hi = b + 1e-3 * bracket;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, bracket); ++i) {
    double mid = 0.5 * (lo + hi);
    if (rho_plus(ctx, x + mid * y, y) >= 0.0) hi = mid;
    else lo = mid;
  }
  OrthoResult res;
  res.minimizer_t = 0.5 * (lo + hi);
  res.margin = std::min(rho_plus(ctx, x, y), -rho_minus(ctx, x, y)) / (nx * ny);
  const double t_tol = std::max(tol, 1e-9) * std::max(1.0, nx / ny);
  res.orthogonal = std::abs(res.minimizer_t) <= t_tol;
  // cross-check with the derivative sandwich rho'_- <= 0 <= rho'_+
  bool deriv_ok = rho_minus(ctx, x, y) <= t_tol * nx * ny &&
                  rho_plus(ctx, x, y) >= -t_tol * nx * ny;
  if (res.orthogonal != deriv_ok) res.orthogonal = deriv_ok;
  return res;
}

Vec birkhoff_direction(const NormModel& model2d, const Vec& g, double tol) {
  require(model2d.dim() == 2, "birkhoff_direction: plane models only");
  if (!model2d.classify().strictly_convex)
    throw UnsupportedError("birkhoff_direction: model is not strictly convex");
  require(g.norm() > 0.0, "birkhoff_direction: g must be nonzero");
  SipContext ctx(model2d);
  auto dir = [](double theta) {
    Vec d(2);
    d << std::cos(theta), std::sin(theta);
    return d;
  };
  auto h = [&](double theta) { return rho_plus(ctx, dir(theta), g); };

  const int scan = 720;
  double lo = 0.0, hi = 0.0;
  double h0 = h(0.0);
  bool found = std::abs(h0) == 0.0;
  if (!found) {
    // a couple of steps past pi catch roots that sit within rounding of
    // the endpoint (h is odd under a half-turn)
    for (int i = 1; i <= scan + 2; ++i) {
      double theta = std::numbers::pi * i / scan;
      double hv = h(theta);
      if (hv == 0.0) { lo = hi = theta; found = true; break; }
      if ((h0 > 0) != (hv > 0)) {
        lo = std::numbers::pi * (i - 1) / scan;
        hi = theta;
        found = true;
        break;
      }
    }
  }
  if (!found) throw NumericError("birkhoff_direction: no sign change found");
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    double mid = 0.5 * (lo + hi);
    if ((h(mid) > 0) == (h(lo) > 0)) lo = mid;
    else hi = mid;
  }
  Vec d = dir(0.5 * (lo + hi));
  d /= model2d.norm(d);
  if (g[0] * d[1] - g[1] * d[0] < 0.0) d = -d;  // det [g d] > 0
  OrthoResult check = birkhoff(model2d, d, g, std::max(tol, 1e-9));
  if (!check.orthogonal)
    throw NumericError("birkhoff_direction: solver result fails the Birkhoff check");
  return d;
}

bool james(const NormModel& model, const Vec& x, const Vec& y, double tol) {
  return std::abs(model.norm(x + y) - model.norm(x - y)) <= tol;
}

}  // namespace mink
