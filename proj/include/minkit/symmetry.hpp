#pragma once

#include <string>
#include <vector>

#include "minkit/normspace.hpp"

namespace mink {

struct GroupClassification {
  enum class Kind { Cyclic, Dihedral, FiniteOther, InfiniteDetected };
  Kind kind = Kind::FiniteOther;
  int k = 0;  // rotation order for cyclic/dihedral

  std::string label() const;
};

// Finite group of linear isometries fixing the origin, each element acting
// on the defining vertex set as an exact permutation.
struct PointGroup {
  std::vector<Mat> elements;
  int order = 0;
  GroupClassification classification;
  bool closure_verified = false;
};

PointGroup polytopal_isometry_group(const std::vector<Vec>& V, double tol = 1e-9);

struct GroupReport {
  bool finite = false;
  PointGroup point_group;           // empty for the infinite case
  GroupClassification classification;
  std::string translations = "all of R^n";
  std::vector<double> determinants;
  std::string note;
};

GroupReport group_report(const NormModel& model, double tol = 1e-9);

std::vector<Vec> orbit_probe(const NormModel& model, const Vec& x, const PointGroup& group);

}  // namespace mink
