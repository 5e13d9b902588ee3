#pragma once

#include "minkit/normspace.hpp"

namespace mink {

// Evaluation context for norm derivatives and the induced semi-inner product.
struct SipContext {
  NormModel model;
  double fd_step = 1e-5;
  double tol = 1e-10;

  explicit SipContext(NormModel m, double step = 1e-5, double tolerance = 1e-10)
      : model(std::move(m)), fd_step(step), tol(tolerance) {
    require(fd_step >= 1e-10 && fd_step <= 1e-3, "SipContext: fd_step out of range");
    require(tol >= 1e-12, "SipContext: tol too small");
  }
};

// One-sided norm derivatives  lim_{t->+-0} (||x+ty||^2 - ||x||^2) / (2t).
// Closed forms for Lp and Quadratic; one-sided finite differences with
// Richardson extrapolation otherwise.
double rho_plus(const SipContext& ctx, const Vec& x, const Vec& y);
double rho_minus(const SipContext& ctx, const Vec& x, const Vec& y);

// Finite-difference evaluation regardless of model kind; the universal
// oracle the closed forms are checked against.
double rho_plus_fd(const SipContext& ctx, const Vec& x, const Vec& y);
double rho_minus_fd(const SipContext& ctx, const Vec& x, const Vec& y);

// [u,v]: additive and homogeneous in u, norm-defining in v. Smooth models
// only; computed as rho_plus(v, u).
double sip(const SipContext& ctx, const Vec& u, const Vec& v);

// Coefficients c of the functional x -> [x,y] on the standard basis.
Vec duality_map(const SipContext& ctx, const Vec& y);

// Inverse of the duality map: y with [x,y] = c.x for all x.
Vec riesz_representer(const SipContext& ctx, const Vec& c);

}  // namespace mink
