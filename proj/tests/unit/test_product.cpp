#include "doctest.h"

#include <cmath>
#include <numbers>

#include "affsphere/classify.hpp"
#include "affsphere/error.hpp"
#include "affsphere/product.hpp"
#include "oracles.hpp"

using namespace affsphere;

namespace {

Vector v2(double x, double y) { return Eigen::Vector2d(x, y); }

AffineSphereSystem id_sys() { return AffineSphereSystem(Matrix::Identity(2, 2), v2(0, 0.5)); }
AffineSphereSystem rot_sys() { return AffineSphereSystem(rotation(std::numbers::pi / 3), v2(0, 0.5)); }
AffineSphereSystem inv_sys() {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = -2;
  return AffineSphereSystem(d, v2(0, std::sqrt(3.0)));
}

}  // namespace

TEST_CASE("assembly") {
  const ProductSphereSystem one({id_sys()});
  CHECK((product_apply(one, {v2(0.6, 0.8)})[0] - apply(id_sys(), v2(0.6, 0.8))).norm() < 1e-12);

  const ProductSphereSystem two({rot_sys(), AffineSphereSystem(rotation(1.0), v2(0.1, 0))});
  CHECK(two.block_matrix().rows() == 4);
  CHECK(two.offset().size() == 4);
  CHECK(two.split().size() == 2);

  CHECK_FALSE(ProductSphereSystem({id_sys(), AffineSphereSystem(rotation(1.0), v2(0, 1.2))}).homeo_certified());
  CHECK_THROWS_AS(ProductSphereSystem({}), Error);
}

TEST_CASE("product apply") {
  const ProductSphereSystem proj({AffineSphereSystem(Matrix::Identity(2, 2), Vector::Zero(2)),
                                  AffineSphereSystem(Matrix::Identity(3, 3), Vector::Zero(3))});
  const ProductPoint v{v2(0.6, 0.8), Eigen::Vector3d(0, 0, 1)};
  const ProductPoint w = product_apply(proj, v);
  CHECK(product_distance(v, w) == 0.0);

  const ProductSphereSystem p({id_sys(), AffineSphereSystem(-Matrix::Identity(2, 2), v2(0, 0.6))});
  const ProductPoint img = product_apply(p, {v2(0, 1), v2(0, 1)});
  CHECK((img[0] - v2(0, 1)).norm() < 1e-15);
  CHECK((img[1] - v2(0, -1)).norm() < 1e-15);
  CHECK((product_apply_inverse(p, img)[1] - v2(0, 1)).norm() < 1e-12);

  const AffineSphereSystem six(rotation(std::numbers::pi / 6), v2(0, 0.6));
  const ProductSphereSystem attract({id_sys(), six});
  ProductPoint x{v2(1, 0), v2(1, 0)};
  for (int i = 0; i < 100; ++i) x = product_apply(attract, x);
  CHECK((x[0] - v2(0, 1)).norm() < 1e-6);
  CHECK((x[1] - oracle::rotation_fixed_points_canonical(std::numbers::pi / 6, 0.6)[0]).norm() < 1e-6);

  CHECK_THROWS_AS(product_apply(attract, {v2(1, 0)}), Error);
}

TEST_CASE("distality composition") {
  const ProductSphereSystem p({id_sys(), inv_sys()});
  const DistalityVerdict nd = distality_verdict(id_sys());
  const DistalityVerdict di = distality_verdict(inv_sys());
  const DistalityVerdict un = distality_verdict(rot_sys());
  REQUIRE(nd.kind == DistalityKind::NonDistal);
  REQUIRE(di.kind == DistalityKind::Distal);
  REQUIRE(un.kind == DistalityKind::Unknown);

  const DistalityVerdict mixed = product_distality_verdict(p, {nd, di});
  CHECK(mixed.kind == DistalityKind::NonDistal);
  REQUIRE(mixed.witness.has_value());
  CHECK(verify(*mixed.witness).pass);

  const ProductSphereSystem dd({inv_sys(), inv_sys()});
  CHECK(product_distality_verdict(dd, {di, di}).kind == DistalityKind::Distal);
  const ProductSphereSystem ud({rot_sys(), inv_sys()});
  CHECK(product_distality_verdict(ud, {un, di}).kind == DistalityKind::Unknown);
}

TEST_CASE("expansivity composition") {
  const ProductSphereSystem p({rot_sys(), id_sys(), rot_sys()});
  const ExpansivityVerdict unknown{ExpansivityKind::Unknown, std::nullopt, "none"};
  const ExpansivityVerdict ne = expansivity_verdict(id_sys());
  REQUIRE(ne.kind == ExpansivityKind::NonExpansive);
  const ExpansivityVerdict lifted = product_expansivity_verdict(p, {unknown, ne, unknown});
  CHECK(lifted.kind == ExpansivityKind::NonExpansive);
  REQUIRE(lifted.witness.has_value());
  CHECK(lifted.witness->data["coordinate"] == 1);
  CHECK(lifted.witness->data["delta"] == ne.witness->data["delta"]);
  CHECK(lifted.witness->data["horizon"] == ne.witness->data["horizon"]);
  CHECK(verify(*lifted.witness).pass);

  CHECK(product_expansivity_verdict(p, {unknown, unknown, unknown}).kind == ExpansivityKind::Unknown);
}

TEST_CASE("lifted pairs keep factor distances") {
  const ProductSphereSystem p({rot_sys(), id_sys()});
  const DistalityVerdict nd = distality_verdict(id_sys());
  REQUIRE(nd.witness.has_value());
  const Witness lifted = lift_witness(p, 1, *nd.witness);
  Vector fx = vector_from_json(nd.witness->data["x"]);
  Vector fy = vector_from_json(nd.witness->data["y"]);
  ProductPoint px = product_point_from_json(lifted.data["x"]);
  ProductPoint py = product_point_from_json(lifted.data["y"]);
  for (int n = 0; n < 200; ++n) {
    CHECK(std::abs(product_distance(px, py) - (fx - fy).norm()) < 1e-12);
    fx = apply(id_sys(), fx);
    fy = apply(id_sys(), fy);
    px = product_apply(p, px);
    py = product_apply(p, py);
  }
}

TEST_CASE("single-factor product reports equal the factor report") {
  for (const auto& sys : {id_sys(), inv_sys(), rot_sys()}) {
    CHECK(report_to_json(classify_product(ProductSphereSystem({sys}))) == report_to_json(classify(sys)));
  }
}

TEST_CASE("product JSON round trip") {
  const ProductSphereSystem p({id_sys(), rot_sys()});
  const ProductSphereSystem back = product_from_json(product_to_json(p));
  CHECK(back.block_matrix() == p.block_matrix());
  CHECK(back.offset() == p.offset());
}
