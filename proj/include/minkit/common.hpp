#pragma once

#include <Eigen/Dense>
#include <random>
#include <stdexcept>
#include <string>

namespace mink {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Error categories map 1:1 onto CLI exit codes (2 = input, 3 = numeric).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

inline void require_finite(const Vec& x, const std::string& what) {
  if (!x.allFinite()) throw InputError(what + ": non-finite entries");
}

inline void require_finite(const Mat& m, const std::string& what) {
  if (!m.allFinite()) throw InputError(what + ": non-finite entries");
}

// All randomized sampling in the toolkit goes through this engine type so
// that a fixed seed reproduces byte-identical artifacts.
using Rng = std::mt19937_64;

inline Vec gaussian_vector(int dim, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = g(rng);
  return v;
}

inline double sgn(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace mink
