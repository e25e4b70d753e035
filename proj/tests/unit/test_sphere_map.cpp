#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "affsphere/circle.hpp"
#include "affsphere/error.hpp"
#include "affsphere/io.hpp"
#include "affsphere/sphere_map.hpp"
#include "oracles.hpp"

using namespace affsphere;

namespace {

Vector v2(double x, double y) { return Eigen::Vector2d(x, y); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("homeomorphism certification") {
  const AffineSphereSystem id(Matrix::Identity(2, 2), v2(0, 0.5));
  CHECK(id.homeo_certified());
  CHECK(id.inverse_offset_norm() == doctest::Approx(0.5));

  CHECK_FALSE(AffineSphereSystem(rotation(0.7), v2(0, 1.2)).homeo_certified());
  CHECK(code_of([] { AffineSphereSystem(rotation(0.7), v2(0, 1.2), true); }) == ErrorCode::HomeoConditionViolated);

  Matrix d(2, 2);
  d << 1, 0, 0, -2;
  const AffineSphereSystem inv(d, v2(0, std::sqrt(3.0)), true);
  CHECK(inv.inverse_offset_norm() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));

  CHECK(code_of([] { AffineSphereSystem(Matrix::Zero(2, 2), v2(0, 0.1)); }) == ErrorCode::SingularMatrix);
  CHECK(code_of([] { AffineSphereSystem(Matrix::Identity(3, 3), v2(0, 0.1)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("apply examples") {
  CHECK((apply(AffineSphereSystem(Matrix::Identity(2, 2), v2(0, 0.5)), v2(0, 1)) - v2(0, 1)).norm() < 1e-15);
  CHECK((apply(AffineSphereSystem(-Matrix::Identity(2, 2), v2(0, 0.6)), v2(0, 1)) - v2(0, -1)).norm() < 1e-15);

  const AffineSphereSystem rot(rotation(std::numbers::pi / 6), v2(0, 0.6));
  const Vector q = v2(-0.5 / 0.6, std::sqrt(0.36 - 0.25) / 0.6);
  CHECK((apply(rot, q) - q).norm() < 1e-4);
  CHECK((apply(rot, q) - q).norm() < 1e-12);

  CHECK(code_of([&] { apply(rot, v2(1, 1)); }) == ErrorCode::InvalidPoint);
  CHECK(code_of([&] { apply(rot, Eigen::Vector3d(1, 0, 0)); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { apply(AffineSphereSystem(Matrix::Identity(2, 2), v2(0, 1)), v2(0, -1)); }) ==
        ErrorCode::DegenerateImage);
}

TEST_CASE("apply matches the direct formula and stays on the sphere") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + trial % 4;
    const Matrix T = oracle::random_matrix(dim, rng);
    const Vector a = 0.9 * oracle::smallest_singular(T) * oracle::random_unit(dim, rng);
    const AffineSphereSystem sys(T, a);
    REQUIRE(sys.homeo_certified());
    const Vector x = oracle::random_unit(dim, rng);
    const Vector y = apply(sys, x);
    CHECK(std::abs(y.norm() - 1.0) < 1e-12);
    CHECK((y - oracle::map(T, a, x)).norm() < 1e-14);
  }
}

TEST_CASE("apply_inverse") {
  const AffineSphereSystem proj(Matrix::Identity(2, 2), Vector::Zero(2));
  const Vector y = v2(0.6, 0.8);
  CHECK((apply_inverse(proj, y) - y).norm() < 1e-15);
  CHECK((apply_inverse(AffineSphereSystem(Matrix::Identity(2, 2), v2(0, 0.5)), v2(0, 1)) - v2(0, 1)).norm() < 1e-15);
  CHECK(code_of([] { apply_inverse(AffineSphereSystem(rotation(1.0), v2(0, 1.5)), v2(1, 0)); }) ==
        ErrorCode::NotInvertible);

  std::mt19937_64 rng(23);
  Matrix T = oracle::random_matrix(4, rng);
  const Vector a = 0.8 * oracle::smallest_singular(T) * oracle::random_unit(4, rng);
  const AffineSphereSystem sys(T, a);
  REQUIRE(sys.homeo_certified());
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Vector p = oracle::random_unit(4, rng);
    worst = std::max(worst, (apply(sys, apply_inverse(sys, p)) - p).norm());
    worst = std::max(worst, (apply_inverse(sys, apply(sys, p)) - p).norm());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("orbit segments") {
  const AffineSphereSystem id(Matrix::Identity(2, 2), v2(0, 0.5));
  const OrbitSegment one = orbit(id, v2(1, 0), 0, 0);
  CHECK(one.points.size() == 1);
  CHECK((one.at(0) - v2(1, 0)).norm() == 0.0);

  const OrbitSegment seg = orbit(id, v2(1, 0), 0, 200);
  CHECK((seg.at(200) - v2(0, 1)).norm() < 1e-6);
  CHECK(seg.norm_factors.size() == 200);

  const OrbitSegment back = orbit(id, v2(0.6, 0.8), -10, 0);
  CHECK(back.points.size() == 11);
  for (int k = -10; k < 0; ++k) CHECK((apply(id, back.at(k)) - back.at(k + 1)).norm() < 1e-12);

  const AffineSphereSystem far(rotation(std::numbers::pi - 0.05), v2(0, 0.5));
  const auto p2 = fixed_points_numeric(far, 2);
  REQUIRE_FALSE(p2.empty());
  const OrbitSegment two = orbit(far, p2.front().point, 0, 2);
  CHECK((two.at(2) - p2.front().point).norm() < 1e-8);
}

TEST_CASE("scalar equivariance on the circle") {
  const Matrix R = rotation(std::numbers::pi / 6);
  const Vector a = v2(0, 0.6);
  CHECK(scalar_equivariance_check(R, a, {1.0, 0.0}, v2(1, 0), 10) == 0.0);
  CHECK(scalar_equivariance_check(R, a, {0.0, 1.0}, v2(1, 0), 10) < 1e-9);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    CHECK(scalar_equivariance_check(R, a, {-1.0, 0.0}, oracle::random_unit(2, rng), 25) < 1e-9);
  }
}

TEST_CASE("system JSON round trip") {
  const AffineSphereSystem sys(rotation(0.3), v2(0.1, -0.2));
  const AffineSphereSystem back = system_from_json(system_to_json(sys));
  CHECK(back.T() == sys.T());
  CHECK(back.a() == sys.a());
  CHECK(code_of([] { system_from_json(json{{"dim", 2}, {"matrix", {{1, 0}, {0, 1}}}}); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] { system_from_json(json{{"dim", 3}, {"matrix", {{1, 0}, {0, 1}}}, {"offset", {0, 0}}}); }) ==
        ErrorCode::MalformedInput);
}
