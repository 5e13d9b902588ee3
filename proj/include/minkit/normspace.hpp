#pragma once

#include <vector>

#include "minkit/common.hpp"

namespace mink {

struct SpaceClassification {
  bool smooth = false;
  bool strictly_convex = false;
};

// A concrete Minkowski norm: l_p power-sum, quadratic (ellipse/ellipsoid
// inner product), or the gauge of a centrally symmetric polytope.
class NormModel {
 public:
  enum class Kind { Lp, Quadratic, Polytopal };

  static NormModel lp(double p, int dim);
  static NormModel quadratic(const Mat& G);
  static NormModel polytopal(const std::vector<Vec>& vertices);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  double p() const { return p_; }
  const Mat& G() const { return G_; }
  const std::vector<Vec>& vertices() const { return vertices_; }

  double norm(const Vec& x) const;
  // Dual norm  max { u.x : norm(x) <= 1 }; closed form for every kind.
  double dual_norm(const Vec& u) const;

  SpaceClassification classify() const;

  std::vector<Vec> unit_sphere_samples(int m, std::uint64_t seed) const;

 private:
  NormModel() = default;

  double polytopal_gauge(const Vec& x) const;

  Kind kind_ = Kind::Lp;
  int dim_ = 0;
  double p_ = 2.0;
  Mat G_;
  std::vector<Vec> vertices_;
};

}  // namespace mink
