#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minkit/ortho.hpp"

namespace mink {

// A line (one direction) or hyperplane (n-1 directions) through a point.
struct LineSpec {
  Vec point;
  Mat directions;  // columns

  static LineSpec line(const Vec& point, const Vec& direction);
};

struct AffineMap {
  Mat L;
  Vec t;

  Vec operator()(const Vec& p) const { return L * p + t; }
  static AffineMap identity(int n) { return {Mat::Identity(n, n), Vec::Zero(n)}; }
  static AffineMap translation(const Vec& p) {
    return {Mat::Identity(p.size(), p.size()), p};
  }
};

enum class MapClass { Identity, Translation, Shear, LeftReflection, Isometry, General };

std::string to_string(MapClass c);

// The affine involution fixing G pointwise and moving points along the
// Birkhoff-orthogonal direction of G, midpoints landing on G.
AffineMap left_reflection(const NormModel& model2d, const LineSpec& G, double tol = 1e-9);

// Same construction for a hyperplane in dimension >= 3.
AffineMap left_reflection_hyperplane(const NormModel& model, const LineSpec& G,
                                     double tol = 1e-9);

// Left-to-right application order: compose({f, g})(p) = g(f(p)).
AffineMap compose(const std::vector<AffineMap>& maps);

MapClass classify_composition(const NormModel& model, const AffineMap& map, double tol = 1e-7);

struct BatteryCriterion {
  std::string name;
  bool pass = false;
  double defect = 0.0;
  std::optional<std::vector<double>> witness;  // criterion-specific parameters
};

struct BatteryReport {
  std::vector<BatteryCriterion> criteria;
  bool all_pass = false;
};

// Four Euclidean-characterization probes: two-reflection products being
// isometries, James-orthogonality preservation, circle images staying
// circles, and the three-reflections closure.
BatteryReport euclidean_battery(const NormModel& model2d, int trials = 24, double tol = 1e-7);

struct ProbeReport {
  double rate = 0.0;
  int trials = 0;
  std::optional<std::vector<double>> counterexample;  // flattened x, y, line angle
};

// Fraction of Birkhoff-orthogonal pairs whose images under sampled left
// reflections stay Birkhoff-orthogonal.
ProbeReport birkhoff_preservation_probe(const NormModel& model2d, int trials = 50,
                                        double tol = 1e-7);

}  // namespace mink
