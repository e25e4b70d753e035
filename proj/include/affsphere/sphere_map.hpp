#pragma once

#include <complex>
#include <vector>

#include "affsphere/linalg.hpp"

namespace affsphere {

/// Certification margin on ||T^-1 a|| < 1.
inline constexpr double kTolBoundary = 1e-9;

/// x -> (a + T x) / ||a + T x|| on the unit sphere of R^dim.
///
/// Immutable after construction. `homeo_certified` means ||T^-1 a|| < 1 - kTolBoundary,
/// which guarantees a homeomorphism and enables apply_inverse. With a == 0 the
/// map is the projective action x -> T x / ||T x||, which is always invertible.
class AffineSphereSystem {
 public:
  /// Throws SingularMatrix, DimensionMismatch, and HomeoConditionViolated when
  /// `require_homeo` is set and the certification fails.
  AffineSphereSystem(Matrix T, Vector a, bool require_homeo = false);

  const Matrix& T() const { return T_; }
  const Vector& a() const { return a_; }
  const Matrix& T_inverse() const { return T_inv_; }
  const Vector& T_inverse_a() const { return T_inv_a_; }
  int dim() const { return static_cast<int>(T_.rows()); }
  int sphere_dim() const { return dim() - 1; }
  double alpha() const { return a_.norm(); }
  /// ||T^-1 a|| as computed at construction.
  double inverse_offset_norm() const { return T_inv_a_norm_; }
  bool homeo_certified() const { return homeo_certified_; }
  bool projective_mode() const { return projective_mode_; }

 private:
  Matrix T_;
  Vector a_;
  Matrix T_inv_;
  Vector T_inv_a_;
  double T_inv_a_norm_ = 0.0;
  bool homeo_certified_ = false;
  bool projective_mode_ = false;
};

AffineSphereSystem build(const Matrix& T, const Vector& a, bool require_homeo);

/// Forward map. Throws InvalidPoint for non-unit x, DegenerateImage when
/// ||a + T x|| <= kTolSingular.
Vector apply(const AffineSphereSystem& sys, const Vector& x);

/// Forward map that also reports ||a + T x||.
Vector apply(const AffineSphereSystem& sys, const Vector& x, double& norm_factor);

/// Inverse map x = T^-1 (t y - a) with t the positive root of
/// ||T^-1 y||^2 t^2 - 2 <T^-1 y, T^-1 a> t + ||T^-1 a||^2 - 1 = 0.
/// Throws NotInvertible when the system is not certified.
Vector apply_inverse(const AffineSphereSystem& sys, const Vector& y);

/// The radial multiplier t* selected by apply_inverse (exposed for tests).
double inverse_radial_multiplier(const AffineSphereSystem& sys, const Vector& y);

/// Applies the map `steps` times; negative counts iterate the inverse.
Vector iterate(const AffineSphereSystem& sys, Vector x, long steps);

struct OrbitSegment {
  Vector base_point;
  int n_min = 0;
  int n_max = 0;
  /// points[k - n_min] = T_a^k(x).
  std::vector<Vector> points;
  /// norm_factors[k] = ||a + T x_k|| for k = 0 .. n_max - 1.
  std::vector<double> norm_factors;

  const Vector& at(int k) const { return points.at(static_cast<std::size_t>(k - n_min)); }
};

OrbitSegment orbit(const AffineSphereSystem& sys, const Vector& x, int n_min, int n_max);

/// ||T_{sa}^n(s x) - s T_a^n(x)|| for a planar rotation T and unit complex s.
double scalar_equivariance_check(const Matrix& T, const Vector& a, std::complex<double> s, const Vector& x, int n);

/// Complex multiplication on R^2 via (x1, x2) <-> x1 + i x2.
Vector complex_mul(std::complex<double> s, const Vector& x);

/// Unit-norm check shared by the point-taking operations.
void require_unit(const Vector& x, int dim, double tol = 1e-8);

}  // namespace affsphere
