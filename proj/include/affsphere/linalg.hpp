#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace affsphere {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Complex = std::complex<double>;

/// Orthonormal pair of columns spanning a plane in R^dim.
using Frame2 = Eigen::Matrix<double, Eigen::Dynamic, 2>;

inline constexpr double kTolSingular = 1e-12;
inline constexpr double kTolUnit = 1e-9;

/// Eigenvalues closer than this (relative) are merged into one cluster.
inline constexpr double kClusterTol = 1e-5;

/// A group of numerically coincident eigenvalues.
struct EigenCluster {
  Complex value;
  int multiplicity = 1;

  bool is_real() const { return value.imag() == 0.0; }
  double modulus() const { return std::abs(value); }
};

struct SpectralSummary {
  /// With algebraic multiplicity, sorted by ascending modulus then argument.
  std::vector<Complex> eigenvalues;
  std::vector<EigenCluster> clusters;
  double dominant_modulus = 0.0;
  bool is_proximal = false;
  /// Orthonormal basis of C(M): generalized eigenspaces with modulus < 1.
  std::vector<Vector> contraction_basis;
  /// Orthonormal basis of C(M^-1): generalized eigenspaces with modulus > 1.
  std::vector<Vector> expansion_basis;
  std::vector<Frame2> invariant_2planes;
};

Matrix invert(const Matrix& m, double tol_singular = kTolSingular);

/// Largest singular value by power iteration on M^T M.
double operator_norm(const Matrix& m);

/// Raw eigenvalues (closed form for dim 2 and 3, real Schur otherwise),
/// unclustered, with multiplicity.
std::vector<Complex> eigenvalues(const Matrix& m);

/// Eigenvalues merged into clusters; conjugate clusters are exact conjugates
/// and clusters with negligible imaginary part are snapped to the real axis.
std::vector<EigenCluster> eigen_clusters(const Matrix& m);

SpectralSummary spectrum(const Matrix& m);

Frame2 invariant_2plane(const Matrix& m);

/// Every candidate plane in tie-break order (complex pairs, then pairs of
/// real eigendirections by ascending modulus); not filtered by residual.
std::vector<Frame2> invariant_2planes(const Matrix& m);

/// ||(I - P) M P|| (Frobenius) for the orthogonal projector P onto span(w).
double plane_invariance_residual(const Matrix& m, const Frame2& w);

/// Unit vector spanning the (near-)kernel of M - lambda I.
Vector real_eigenvector(const Matrix& m, double lambda);

/// Invariant plane of the complex pair {lambda, conj(lambda)}.
Frame2 complex_pair_plane(const Matrix& m, Complex lambda);

/// Orthonormal basis (columns) of the generalized eigenspace of a cluster;
/// real dimension is multiplicity (real) or 2 * multiplicity (complex).
Matrix generalized_eigenspace(const Matrix& m, const EigenCluster& cluster);

/// Orthonormalize two vectors into a frame.
Frame2 make_frame(const Vector& u, const Vector& v);

Matrix rotation(double theta);

}  // namespace affsphere
