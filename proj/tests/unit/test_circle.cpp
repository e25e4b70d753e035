#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "affsphere/circle.hpp"
#include "affsphere/error.hpp"
#include "oracles.hpp"

using namespace affsphere;

namespace {

Vector v2(double x, double y) { return Eigen::Vector2d(x, y); }

Matrix diag2(double p, double q) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = p;
  m(1, 1) = q;
  return m;
}

std::vector<Vector> points_of(const std::vector<FixedPointRecord>& rs) {
  std::vector<Vector> out;
  for (const auto& r : rs) out.push_back(r.point);
  return out;
}

}  // namespace

TEST_CASE("involution detection") {
  const AffineSphereSystem inv(diag2(1, -2), v2(0, std::sqrt(3.0)));
  const InvolutionReport r = involution_check(inv);
  CHECK(r.is_involution);
  CHECK(r.condition_i);
  CHECK(r.condition_ii);
  CHECK(r.condition_iii);
  CHECK(r.lambda1 == doctest::Approx(-2.0));
  CHECK(r.lambda2 == doctest::Approx(1.0));
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Vector x = oracle::unit_at(2.0 * std::numbers::pi * (i + 0.37) / 1000);
    worst = std::max(worst, (oracle::map_power(inv.T(), inv.a(), x, 2) - x).norm());
  }
  CHECK(worst < 1e-9);

  CHECK_FALSE(involution_check(AffineSphereSystem(Matrix::Identity(2, 2), v2(0.3, 0.4))).is_involution);

  const InvolutionReport broken = involution_check(AffineSphereSystem(diag2(1, -2), v2(0, 1.0)));
  CHECK_FALSE(broken.is_involution);
  CHECK_FALSE(broken.condition_iii);
  CHECK(broken.max_residual > 1e-3);
}

TEST_CASE("involution holds for rescaled instances") {
  // lambda1^2 = alpha^2 + lambda2^2 with a on the lambda1 axis
  for (double l2 : {0.5, 1.0, 3.0}) {
    for (double alpha : {0.2, 0.7}) {
      const double l1 = -std::sqrt(alpha * alpha + l2 * l2);
      const AffineSphereSystem sys(diag2(l2, l1), v2(0, alpha));
      CHECK(involution_check(sys).is_involution);
    }
  }
}

TEST_CASE("rotation fixed points closed forms") {
  const auto zero = rotation_fixed_points(0.0, v2(0, 0.5));
  REQUIRE(zero.size() == 2);
  CHECK((zero[0].point - v2(0, 1)).norm() < 1e-14);
  CHECK((zero[1].point - v2(0, -1)).norm() < 1e-14);

  CHECK(rotation_fixed_points(std::numbers::pi / 3, v2(0, 0.5)).empty());
  CHECK(oracle::periodic_points(rotation(std::numbers::pi / 3), v2(0, 0.5), 1).empty());

  const auto six = rotation_fixed_points(std::numbers::pi / 6, v2(0, 0.6));
  REQUIRE(six.size() == 2);
  const auto canon = oracle::rotation_fixed_points_canonical(std::numbers::pi / 6, 0.6);
  CHECK((six[0].point - canon[0]).norm() < 1e-12);
  CHECK(six[0].point(0) == doctest::Approx(-0.8333333333333334));
  CHECK(six[0].point(1) == doctest::Approx(0.5527707983925666));
  for (const auto& r : six) {
    CHECK((oracle::map(rotation(std::numbers::pi / 6), v2(0, 0.6), r.point) - r.point).norm() < 1e-12);
  }
}

TEST_CASE("numeric scan agrees with the closed form off the boundary") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> th(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> al(0.05, 0.95);
  int tested = 0;
  while (tested < 200) {
    const double theta = th(rng);
    const double alpha = al(rng);
    if (std::abs(std::cos(theta) - std::sqrt(1 - alpha * alpha)) < 1e-3) continue;
    ++tested;
    const auto closed = points_of(rotation_fixed_points(theta, v2(0, alpha)));
    const auto numeric = points_of(fixed_points_numeric(AffineSphereSystem(rotation(theta), v2(0, alpha)), 1));
    REQUIRE(closed.size() == numeric.size());
    for (const auto& p : closed) CHECK(oracle::contains(numeric, p, 1e-8));
  }
}

TEST_CASE("numeric scan agrees with the independent oracle") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix T = oracle::random_matrix(2, rng);
    const Vector a = 0.7 * oracle::smallest_singular(T) * oracle::random_unit(2, rng);
    const AffineSphereSystem sys(T, a);
    for (int p : {1, 2}) {
      const auto mine = points_of(fixed_points_numeric(sys, p));
      const auto ref = oracle::periodic_points(T, a, p);
      CHECK(mine.size() == ref.size());
      for (const auto& x : ref) CHECK(oracle::contains(mine, x, 1e-8));
    }
  }
}

TEST_CASE("fixed points of the identity offset system") {
  const auto pts = fixed_points_numeric(AffineSphereSystem(Matrix::Identity(2, 2), v2(0, 0.5)), 1);
  REQUIRE(pts.size() == 2);
  for (const auto& r : pts) {
    if (r.point(1) > 0) {
      CHECK((r.point - v2(0, 1)).norm() < 1e-9);
      CHECK(r.stability == Stability::Attracting);
    } else {
      CHECK((r.point - v2(0, -1)).norm() < 1e-9);
      CHECK(r.stability == Stability::Repelling);
    }
  }
}

TEST_CASE("period-2 structure of rotations") {
  CHECK(fixed_points_numeric(AffineSphereSystem(rotation(std::numbers::pi / 3), v2(0, 0.5)), 2).empty());
  const AffineSphereSystem far(rotation(std::numbers::pi - 0.05), v2(0, 0.5));
  const auto p2 = fixed_points_numeric(far, 2);
  int minimal = 0;
  for (const auto& r : p2) minimal += r.period == 2 ? 1 : 0;
  CHECK(minimal == 4);
  CHECK(oracle::minimal_periodic_points(far.T(), far.a(), 2).size() == 4);
}

TEST_CASE("stability of rotation fixed points") {
  const auto [q0, p0] = classify_rotation(0.0, v2(0, 0.5));
  CHECK((q0.point - v2(0, 1)).norm() < 1e-12);
  CHECK(q0.stability == Stability::Attracting);
  CHECK(p0.stability == Stability::Repelling);

  const auto [q, p] = classify_rotation(std::numbers::pi / 6, v2(0, 0.6));
  CHECK(q.stability == Stability::Attracting);
  CHECK(oracle::multiplier(rotation(std::numbers::pi / 6), v2(0, 0.6), q.point, 1) < 1.0);
  CHECK(p.stability == Stability::Repelling);
  CHECK(oracle::multiplier(rotation(std::numbers::pi / 6), v2(0, 0.6), p.point, 1) > 1.0);

  CHECK_THROWS_AS(classify_rotation(std::numbers::pi / 3, v2(0, 0.5)), Error);
}

TEST_CASE("classification is invariant under a frame rotation") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> phi(0.0, 2 * std::numbers::pi);
  const double theta = std::numbers::pi / 6;
  const auto [q, p] = classify_rotation(theta, v2(0, 0.6));
  for (int i = 0; i < 10; ++i) {
    const double f = phi(rng);
    const std::complex<double> s = std::polar(1.0, f);
    const auto [qs, ps] = classify_rotation(theta, complex_mul(s, v2(0, 0.6)));
    CHECK((qs.point - complex_mul(s, q.point)).norm() < 1e-10);
    CHECK((ps.point - complex_mul(s, p.point)).norm() < 1e-10);
    CHECK(qs.stability == Stability::Attracting);
    CHECK(qs.multiplier == doctest::Approx(q.multiplier).epsilon(1e-8));
  }
}

TEST_CASE("angle derivative matches central differences") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix T = oracle::random_matrix(2, rng);
    const Vector a = 0.5 * oracle::smallest_singular(T) * oracle::random_unit(2, rng);
    const AffineSphereSystem sys(T, a);
    const Vector x = oracle::random_unit(2, rng);
    for (int p : {1, 2, 3}) {
      CHECK(std::abs(angle_derivative(sys, x, p)) == doctest::Approx(oracle::multiplier(T, a, x, p)).epsilon(1e-5));
    }
  }
}

TEST_CASE("negative identity period-2 points") {
  for (double alpha : {0.2, 0.6, 0.9}) {
    const auto recs = neg_identity_analysis(v2(0, alpha));
    REQUIRE(recs.size() == 4);
    const double c = std::sqrt(1 - alpha * alpha / 4);
    const std::vector<Vector> expected_attr{v2(-c, alpha / 2), v2(c, alpha / 2)};
    const std::vector<Vector> expected_rep{v2(0, 1), v2(0, -1)};
    for (const auto& r : recs) {
      CHECK(r.period == 2);
      if (r.stability == Stability::Attracting) {
        CHECK(oracle::contains(expected_attr, r.point, 1e-8));
      } else {
        CHECK(r.stability == Stability::Repelling);
        CHECK(oracle::contains(expected_rep, r.point, 1e-8));
      }
    }
  }
  const Vector a = v2(0, 0.6);
  const Matrix negI = -Matrix::Identity(2, 2);
  const Vector x0 = v2(-std::sqrt(1 - 0.09), 0.3);
  CHECK(x0(0) == doctest::Approx(-0.9539392014169456));
  CHECK((oracle::map(negI, a, x0) - (a - x0)).norm() < 1e-12);
  CHECK((oracle::map(negI, a, v2(0, 1)) - v2(0, -1)).norm() < 1e-12);
  CHECK((oracle::map(negI, a, v2(0, -1)) - v2(0, 1)).norm() < 1e-12);

  const auto scan = fixed_points_numeric(AffineSphereSystem(negI, v2(0, 0.2)), 2);
  REQUIRE(scan.size() == 4);
  const double c = std::sqrt(1 - 0.01);
  const std::vector<Vector> closed{v2(-c, 0.1), v2(c, 0.1), v2(0, 1), v2(0, -1)};
  for (const auto& r : scan) CHECK(oracle::contains(closed, r.point, 1e-8));
}

TEST_CASE("eigenvector period-2 points") {
  const auto r = eigenvector_period2(AffineSphereSystem(diag2(-2, -3), v2(0.8, 0)));
  REQUIRE(r.has_value());
  CHECK((r->point - v2(1, 0)).norm() < 1e-12);
  CHECK(r->period == 2);
  CHECK((oracle::map_power(diag2(-2, -3), v2(0.8, 0), v2(1, 0), 2) - v2(1, 0)).norm() < 1e-12);

  CHECK_FALSE(eigenvector_period2(AffineSphereSystem(diag2(2, 3), v2(0.5, 0))).has_value());

  const AffineSphereSystem inv(diag2(1, -2), v2(0, std::sqrt(3.0)));
  const auto ri = eigenvector_period2(inv);
  REQUIRE(ri.has_value());
  CHECK((ri->point - v2(0, 1)).norm() < 1e-12);
  CHECK(involution_check(inv).is_involution);
}

TEST_CASE("non-distal witnesses on the circle") {
  const CircleWitnessResult id = nondistal_witness_circle(AffineSphereSystem(Matrix::Identity(2, 2), v2(0, 0.5)), 200);
  REQUIRE(id.witness.has_value());
  const json& d = id.witness->data;
  CHECK(d["final_distance"].get<double>() < 1e-6);
  CHECK((vector_from_json(d["x"]) - v2(0, 1)).norm() < 0.1);
  CHECK(verify(*id.witness).pass);

  const CircleWitnessResult inv = nondistal_witness_circle(AffineSphereSystem(diag2(1, -2), v2(0, std::sqrt(3.0))));
  CHECK_FALSE(inv.witness.has_value());
  CHECK(inv.reason == "involution");

  const CircleWitnessResult none = nondistal_witness_circle(AffineSphereSystem(rotation(std::numbers::pi / 3), v2(0, 0.5)));
  CHECK_FALSE(none.witness.has_value());
  CHECK(none.reason == "unknown");
}
