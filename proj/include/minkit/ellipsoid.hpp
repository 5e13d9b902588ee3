#pragma once

#include <vector>

#include "minkit/normspace.hpp"

namespace mink {

// x in E  iff  (x - center)^T S (x - center) <= 1
struct Ellipsoid {
  Vec center;
  Mat S;

  double gauge(const Vec& x) const {
    Vec d = x - center;
    return std::sqrt(d.dot(S * d));
  }
};

// Minimum-volume enclosing ellipsoid of a point cloud (Khachiyan ascent).
Ellipsoid lowner(const std::vector<Vec>& points, double eps = 1e-6);

// Maximum-volume inscribed ellipsoid of the unit ball, via the polar of the
// Loewner ellipsoid of the polar body.
Ellipsoid john(const NormModel& model, double eps = 1e-6);

// Sampled unit vectors lying on the boundary of E (gauge within tol of 1),
// clustered to distinct representatives and paired with antipodes.
std::vector<Vec> contact_points(const NormModel& model, const Ellipsoid& E, double tol = 1e-4,
                                int samples = 4096);

// Boundary samples of conv(unit ball  U  planar 2n-gon circumscribed about
// the (1+eps)-scaled equator) in 3-D, by support-function evaluation.
std::vector<Vec> remark_body_samples(int n, double eps, int m);

// Exact vertex enumeration of the polar polytope { c : c.v <= 1 } of a
// centrally symmetric polytope with vertex set V (desk scale).
std::vector<Vec> polar_polytope_vertices(const std::vector<Vec>& V, double tol = 1e-9);

}  // namespace mink
