#include "doctest.h"

#include <cmath>

#include "affsphere/circle.hpp"
#include "affsphere/error.hpp"
#include "affsphere/witness.hpp"

using namespace affsphere;

namespace {

Vector v2(double x, double y) { return Eigen::Vector2d(x, y); }

Witness fixed_point_witness() {
  const AffineSphereSystem sys(Matrix::Identity(2, 2), v2(0, 0.5));
  return Witness{WitnessKind::FixedPoint, sys, json{{"point", {0.0, 1.0}}, {"period", 1}, {"residual", 0.0}}};
}

Witness involution_witness() {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = -2;
  const AffineSphereSystem sys(d, v2(0, std::sqrt(3.0)));
  return Witness{WitnessKind::Involution, sys, json{{"samples", 1000}, {"max_residual", 0.0}}, 1e-9, 7};
}

}  // namespace

TEST_CASE("exact fixed point witness") {
  const VerificationReport r = verify(fixed_point_witness());
  CHECK(r.pass);
  for (const auto& b : r.recomputed_bounds) {
    if (b.name == "residual") CHECK(b.recomputed < 1e-12);
  }
}

TEST_CASE("involution witness replays on fresh samples") {
  CHECK(verify(involution_witness()).pass);
}

TEST_CASE("tampered witnesses fail") {
  Witness w = fixed_point_witness();
  w.data["point"] = {std::sin(1e-3), std::cos(1e-3)};
  CHECK_FALSE(verify(w).pass);

  const CircleWitnessResult c = nondistal_witness_circle(AffineSphereSystem(Matrix::Identity(2, 2), v2(0, 0.5)));
  REQUIRE(c.witness.has_value());
  Witness pair = *c.witness;
  pair.data["final_distance"] = pair.data["final_distance"].get<double>() + 1e-3;
  CHECK_FALSE(verify(pair).pass);
}

TEST_CASE("verification is deterministic") {
  const Witness w = involution_witness();
  CHECK(report_to_json(verify(w)) == report_to_json(verify(w)));
}

TEST_CASE("witness JSON round trip") {
  const Witness w = involution_witness();
  const json j = witness_to_json(w);
  CHECK(j["seed"] == "7");
  const Witness back = witness_from_json(j);
  CHECK(back.kind == w.kind);
  CHECK(back.seed == 7);
  CHECK(witness_to_json(back) == j);
  CHECK(report_to_json(verify(back)) == report_to_json(verify(w)));
}

TEST_CASE("malformed witnesses are rejected") {
  json j = witness_to_json(fixed_point_witness());
  j["kind"] = "Bogus";
  CHECK_THROWS_AS(witness_from_json(j), Error);
  Witness w = fixed_point_witness();
  w.data.erase("point");
  try {
    verify(w);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedWitness);
  }
}
