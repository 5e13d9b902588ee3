#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "minkit/ellipsoid.hpp"

using namespace mink;

namespace {

constexpr double kPi = std::numbers::pi;

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Vec v3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

std::vector<Vec> box2() {
  return {v2(1, 1), v2(-1, 1), v2(1, -1), v2(-1, -1)};
}

std::vector<Vec> diamond2() {
  return {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)};
}

std::vector<Vec> hexagon() {
  std::vector<Vec> v;
  for (int k = 0; k < 6; ++k) v.push_back(v2(std::cos(kPi * k / 3), std::sin(kPi * k / 3)));
  return v;
}

std::vector<Vec> cross3() {
  return {v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0), v3(0, -1, 0), v3(0, 0, 1), v3(0, 0, -1)};
}

bool contains_close(const std::vector<Vec>& set, const Vec& x, double tol = 1e-6) {
  return std::any_of(set.begin(), set.end(),
                     [&](const Vec& w) { return (w - x).norm() <= tol; });
}

}  // namespace

TEST_CASE("lowner circle of the square") {
  auto E = lowner(box2());
  CHECK(E.center.norm() < 1e-9);
  CHECK((E.S - 0.5 * Mat::Identity(2, 2)).norm() < 1e-4);
  for (const Vec& v : box2()) CHECK(E.gauge(v) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("lowner circle of the hexagon") {
  auto E = lowner(hexagon());
  CHECK(E.center.norm() < 1e-9);
  CHECK((E.S - Mat::Identity(2, 2)).norm() < 1e-4);
}

TEST_CASE("lowner recovers an ellipse from its boundary points") {
  Mat G(2, 2);
  G << 0.25, 0.1, 0.1, 1.0;
  auto m = NormModel::quadratic(G);
  auto pts = m.unit_sphere_samples(64, 3);
  std::vector<Vec> cloud;
  for (const Vec& p : pts) {
    cloud.push_back(p);
    cloud.push_back(-p);
  }
  auto E = lowner(cloud);
  CHECK(E.center.norm() < 1e-8);
  CHECK((E.S - G).norm() < 1e-3);
}

TEST_CASE("lowner of a shifted cloud finds the center") {
  Mat A(2, 2);
  A << 1.5, 0.4, 0, 0.8;
  Vec c = v2(2, -1);
  std::vector<Vec> cloud;
  for (const Vec& h : hexagon()) cloud.push_back(c + A * h);
  auto E = lowner(cloud, 1e-8);
  CHECK((E.center - c).norm() < 1e-3);
  Mat expect = (A * A.transpose()).inverse();
  CHECK((E.S - expect).norm() < 1e-3);
  for (const Vec& p : cloud) CHECK(E.gauge(p) <= 1.0 + 1e-3);
}

TEST_CASE("lowner affine equivariance on a symmetric cloud") {
  Mat T(2, 2);
  T << 2, 0.5, -0.3, 1.2;
  std::vector<Vec> cloud, image;
  for (const Vec& h : hexagon()) {
    cloud.push_back(h);
    image.push_back(T * h);
  }
  auto E0 = lowner(cloud, 1e-8);
  auto E1 = lowner(image, 1e-8);
  Mat expect = T.inverse().transpose() * E0.S * T.inverse();
  CHECK((E1.S - expect).norm() < 1e-4);
}

TEST_CASE("lowner rejects degenerate clouds") {
  CHECK_THROWS_AS(lowner({v2(1, 0), v2(-1, 0), v2(2, 0)}), InputError);
  CHECK_THROWS_AS(lowner({}), InputError);
}

TEST_CASE("polar polytope vertices swap the square and the diamond") {
  auto polar_of_diamond = polar_polytope_vertices(diamond2());
  REQUIRE(polar_of_diamond.size() == 4);
  for (const Vec& v : box2()) CHECK(contains_close(polar_of_diamond, v));

  auto polar_of_box = polar_polytope_vertices(box2());
  REQUIRE(polar_of_box.size() == 4);
  for (const Vec& v : diamond2()) CHECK(contains_close(polar_of_box, v));
}

TEST_CASE("john ellipsoid of a quadratic body is the body") {
  Mat G(2, 2);
  G << 0.25, 0, 0, 1;
  auto E = john(NormModel::quadratic(G));
  CHECK(E.center.norm() == 0.0);
  CHECK((E.S - G).norm() == 0.0);
}

TEST_CASE("john disk of the square touches the edge midpoints") {
  auto m = NormModel::polytopal(box2());
  auto E = john(m);
  CHECK(E.center.norm() < 1e-9);
  CHECK((E.S - Mat::Identity(2, 2)).norm() < 1e-4);
  auto contacts = contact_points(m, E);
  CHECK(contacts.size() == 4);
  for (const Vec& c : {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)})
    CHECK(contains_close(contacts, c, 1e-3));
}

TEST_CASE("john ball of the 3-d cross-polytope has radius 1/sqrt(3)") {
  auto m = NormModel::polytopal(cross3());
  auto E = john(m);
  CHECK((E.S - 3.0 * Mat::Identity(3, 3)).norm() < 1e-3);
}

TEST_CASE("john ellipsoid of l_3 is inscribed with contact") {
  auto m = NormModel::lp(3.0, 2);
  auto E = john(m);
  double min_gauge = 1e100;
  for (const Vec& x : m.unit_sphere_samples(512, 7)) {
    double g = E.gauge(x);
    CHECK(g >= 1.0 - 1e-3);          // inside the unit ball
    CHECK(g <= std::sqrt(2.0) + 1e-3);  // John ratio bound in the plane
    min_gauge = std::min(min_gauge, g);
  }
  CHECK(min_gauge <= 1.0 + 1e-2);  // boundary contact exists
}

TEST_CASE("lowner-john sandwich for the square model") {
  auto m = NormModel::polytopal(box2());
  std::vector<Vec> verts = m.vertices();
  auto EL = lowner(verts);
  auto EJ = john(m);
  for (const Vec& x : m.unit_sphere_samples(256, 9)) {
    CHECK(EL.gauge(x) <= 1.0 + 1e-3);  // Loewner contains the body
    CHECK(EJ.gauge(x) >= 1.0 - 1e-3);  // John sits inside
  }
}

TEST_CASE("remark body samples") {
  const int n = 16;
  const double eps = 0.04;
  auto pts = remark_body_samples(n, eps, 1200);
  REQUIRE(pts.size() >= 600);
  const double R = (1.0 + eps) / std::cos(kPi / (2.0 * n));
  bool saw_pole = false, saw_rim = false;
  for (const Vec& x : pts) {
    CHECK(x.norm() >= 1.0 - 1e-9);
    CHECK(x.norm() <= R + 1e-9);
    CHECK(contains_close(pts, -x, 1e-9));  // central symmetry
    if (std::abs(x[2]) > 0.99) saw_pole = true;
    if (std::abs(x[2]) < 1e-9 && x.norm() > 1.0 + eps / 2) saw_rim = true;
  }
  CHECK(saw_pole);
  CHECK(saw_rim);
  CHECK_THROWS_AS(remark_body_samples(2, eps, 1200), InputError);
  CHECK_THROWS_AS(remark_body_samples(n, -0.1, 1200), InputError);
}
