#pragma once

#include "minkit/sip.hpp"

namespace mink {

struct OrthoResult {
  bool orthogonal = false;
  double margin = 0.0;      // signed diagnostic residual
  double minimizer_t = 0.0;  // argmin of t -> ||x + t y||
};

// Birkhoff orthogonality x |_B y: ||x + ty|| >= ||x|| for all t. Decided by
// golden-section minimization of the convex map t -> ||x + ty||.
OrthoResult birkhoff(const NormModel& model, const Vec& x, const Vec& y, double tol = 1e-9);

// The unique (up to sign) unit direction d with d |_B g in a strictly
// convex plane; canonicalized so det[g d] > 0.
Vec birkhoff_direction(const NormModel& model2d, const Vec& g, double tol = 1e-12);

// James orthogonality ||x + y|| = ||x - y||.
bool james(const NormModel& model, const Vec& x, const Vec& y, double tol = 1e-9);

}  // namespace mink
