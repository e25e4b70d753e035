#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "affsphere/error.hpp"
#include "affsphere/linalg.hpp"
#include "oracles.hpp"

using namespace affsphere;

namespace {

Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

bool in_span(const Frame2& w, const Vector& v, double tol) { return (v - w * (w.transpose() * v)).norm() < tol; }

}  // namespace

TEST_CASE("invert closed forms") {
  CHECK((invert(Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)).norm() == doctest::Approx(0.0));
  CHECK((invert(mat2(2, 0, 0, -2)) - mat2(0.5, 0, 0, -0.5)).norm() < 1e-15);
  CHECK((invert(mat2(1, 1, 0, 1)) - mat2(1, -1, 0, 1)).norm() < 1e-15);
  CHECK_THROWS_AS(invert(mat2(1, 2, 2, 4)), Error);
  try {
    invert(mat2(1, 2, 2, 4));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
}

TEST_CASE("invert is an involution on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 2 + trial % 4;
    const Matrix m = oracle::random_matrix(dim, rng);
    CHECK((invert(invert(m)) - m).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("operator norm") {
  CHECK(operator_norm(Matrix::Identity(2, 2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(mat2(3, 0, 0, 0.5)) == doctest::Approx(3.0).epsilon(1e-12));
  for (double t : {0.1, 1.0, 2.5, -3.0}) CHECK(operator_norm(rotation(t)) == doctest::Approx(1.0).epsilon(1e-12));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = oracle::random_matrix(2 + trial % 4, rng);
    Eigen::JacobiSVD<Matrix> svd(m);
    CHECK(operator_norm(m) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-9));
  }
}

TEST_CASE("spectrum of small examples") {
  const SpectralSummary d = spectrum(mat2(0.5, 0, 0, 2));
  REQUIRE(d.contraction_basis.size() == 1);
  CHECK(std::abs(d.contraction_basis[0](0)) == doctest::Approx(1.0));
  CHECK(d.is_proximal);
  CHECK(d.dominant_modulus == doctest::Approx(2.0));

  const SpectralSummary r = spectrum(rotation(std::numbers::pi / 3));
  REQUIRE(r.eigenvalues.size() == 2);
  for (const auto& z : r.eigenvalues) {
    CHECK(z.real() == doctest::Approx(0.5));
    CHECK(std::abs(z.imag()) == doctest::Approx(std::sqrt(3.0) / 2));
  }
  CHECK(r.contraction_basis.empty());
  CHECK_FALSE(r.is_proximal);

  const SpectralSummary j = spectrum(mat2(1, 1, 0, 1));
  REQUIRE(j.clusters.size() == 1);
  CHECK(j.clusters[0].multiplicity == 2);
  CHECK(j.clusters[0].value.real() == doctest::Approx(1.0));
  CHECK_FALSE(j.is_proximal);
}

TEST_CASE("eigenvalues agree with a generic solver") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 2 + trial % 4;
    const Matrix m = oracle::random_matrix(dim, rng);
    auto mine = eigenvalues(m);
    Eigen::EigenSolver<Matrix> es(m);
    std::vector<Complex> ref(es.eigenvalues().data(), es.eigenvalues().data() + dim);
    REQUIRE(mine.size() == ref.size());
    for (const Complex& z : ref) {
      const double best = std::abs(*std::min_element(mine.begin(), mine.end(), [&](Complex p, Complex q) {
        return std::abs(p - z) < std::abs(q - z);
      }) - z);
      CHECK(best < 1e-8 * std::max(1.0, std::abs(z)));
    }
  }
}

TEST_CASE("invariant 2-planes") {
  const Frame2 w2 = invariant_2plane(mat2(3, 1, -2, 5));
  CHECK(std::abs(std::abs((w2.transpose() * w2).determinant()) - 1.0) < 1e-12);

  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 2, 3, 5;
  const Frame2 w = invariant_2plane(d);
  CHECK(in_span(w, Vector::Unit(3, 0), 1e-10));
  CHECK(in_span(w, Vector::Unit(3, 1), 1e-10));
  CHECK(plane_invariance_residual(d, w) < 1e-10);

  Matrix b = Matrix::Zero(4, 4);
  b.topLeftCorner(2, 2) = rotation(std::numbers::pi / 4);
  b(2, 2) = 2;
  b(3, 3) = 3;
  const Frame2 wr = invariant_2plane(b);
  CHECK(in_span(wr, Vector::Unit(4, 0), 1e-10));
  CHECK(in_span(wr, Vector::Unit(4, 1), 1e-10));
  // residual against the explicit projector formula
  const Matrix P = wr * wr.transpose();
  CHECK(((Matrix::Identity(4, 4) - P) * b * P).norm() < 1e-10);
}

TEST_CASE("random matrices have an invariant plane with small residual") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 3 + trial % 3;
    const Matrix m = oracle::random_matrix(dim, rng);
    const Frame2 w = invariant_2plane(m);
    CHECK((w.transpose() * w - Eigen::Matrix2d::Identity()).norm() < 1e-10);
    CHECK(plane_invariance_residual(m, w) < 1e-8 * std::max(1.0, m.norm()));
  }
}

TEST_CASE("generalized eigenspace of a Jordan block") {
  Matrix m = Matrix::Zero(3, 3);
  m << 2, 1, 0, 0, 2, 0, 0, 0, 5;
  for (const auto& c : eigen_clusters(m)) {
    const Matrix g = generalized_eigenspace(m, c);
    CHECK(g.cols() == c.multiplicity);
    const Matrix N = m - c.value.real() * Matrix::Identity(3, 3);
    Matrix Nk = N;
    for (int k = 1; k < c.multiplicity; ++k) Nk = Nk * N;
    CHECK((Nk * g).norm() < 1e-8);
  }
}
