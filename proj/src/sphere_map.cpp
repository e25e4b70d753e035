#include "affsphere/sphere_map.hpp"

#include <cmath>
#include <string>

#include "affsphere/error.hpp"

namespace affsphere {

AffineSphereSystem::AffineSphereSystem(Matrix T, Vector a, bool require_homeo) : T_(std::move(T)), a_(std::move(a)) {
  if (T_.rows() != T_.cols() || T_.rows() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "system matrix must be square with dim >= 2");
  }
  if (a_.size() != T_.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "offset length " + std::to_string(a_.size()) + " != dim " +
                                                  std::to_string(T_.rows()));
  }
  T_inv_ = invert(T_);
  T_inv_a_ = T_inv_ * a_;
  T_inv_a_norm_ = T_inv_a_.norm();
  projective_mode_ = a_.norm() == 0.0;
  homeo_certified_ = T_inv_a_norm_ < 1.0 - kTolBoundary;
  if (require_homeo && !homeo_certified_) {
    throw Error(ErrorCode::HomeoConditionViolated, "||T^-1 a|| = " + std::to_string(T_inv_a_norm_));
  }
}

AffineSphereSystem build(const Matrix& T, const Vector& a, bool require_homeo) {
  return AffineSphereSystem(T, a, require_homeo);
}

void require_unit(const Vector& x, int dim, double tol) {
  if (x.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "point has length " + std::to_string(x.size()) + ", expected " +
                                                  std::to_string(dim));
  }
  if (std::abs(x.norm() - 1.0) > tol) {
    throw Error(ErrorCode::InvalidPoint, "point is not on the unit sphere (norm " + std::to_string(x.norm()) + ")");
  }
}

Vector apply(const AffineSphereSystem& sys, const Vector& x, double& norm_factor) {
  require_unit(x, sys.dim());
  Vector y = sys.a() + sys.T() * x;
  norm_factor = y.norm();
  if (!(norm_factor > kTolSingular)) {
    throw Error(ErrorCode::DegenerateImage, "||a + T x|| vanishes");
  }
  y /= norm_factor;
  return y;
}

Vector apply(const AffineSphereSystem& sys, const Vector& x) {
  double unused = 0.0;
  return apply(sys, x, unused);
}

double inverse_radial_multiplier(const AffineSphereSystem& sys, const Vector& y) {
  if (!sys.homeo_certified()) {
    throw Error(ErrorCode::NotInvertible, "inverse needs ||T^-1 a|| < 1");
  }
  require_unit(y, sys.dim());
  const Vector u = sys.T_inverse() * y;
  const double quad = u.squaredNorm();
  const double lin = u.dot(sys.T_inverse_a());
  const double cst = sys.T_inverse_a().squaredNorm() - 1.0;  // < 0
  const double root = std::sqrt(lin * lin - quad * cst);
  // roots have opposite signs; pick the positive one without cancellation
  const double t = lin >= 0.0 ? (lin + root) / quad : -cst / (root - lin);
  const double other = cst / (quad * t);
  if (!(t > 0.0) || other > 0.0) {
    throw Error(ErrorCode::InternalInconsistency, "radial multiplier roots do not straddle zero");
  }
  return t;
}

Vector apply_inverse(const AffineSphereSystem& sys, const Vector& y) {
  const double t = inverse_radial_multiplier(sys, y);
  Vector x = t * (sys.T_inverse() * y) - sys.T_inverse_a();
  x.normalize();
  return x;
}

Vector iterate(const AffineSphereSystem& sys, Vector x, long steps) {
  if (steps >= 0) {
    for (long k = 0; k < steps; ++k) x = apply(sys, x);
  } else {
    for (long k = 0; k < -steps; ++k) x = apply_inverse(sys, x);
  }
  return x;
}

OrbitSegment orbit(const AffineSphereSystem& sys, const Vector& x, int n_min, int n_max) {
  if (n_min > 0 || n_max < 0) {
    throw Error(ErrorCode::DimensionMismatch, "orbit range must contain 0");
  }
  if (n_min < 0 && !sys.homeo_certified()) {
    throw Error(ErrorCode::NotInvertible, "backward orbit needs a certified system");
  }
  require_unit(x, sys.dim());
  OrbitSegment seg;
  seg.base_point = x;
  seg.n_min = n_min;
  seg.n_max = n_max;
  seg.points.resize(static_cast<std::size_t>(n_max - n_min + 1));
  const auto zero = static_cast<std::size_t>(-n_min);
  seg.points[zero] = x.normalized();
  for (std::size_t k = zero; k > 0; --k) seg.points[k - 1] = apply_inverse(sys, seg.points[k]);
  seg.norm_factors.reserve(static_cast<std::size_t>(n_max));
  for (std::size_t k = zero; k + 1 < seg.points.size(); ++k) {
    double b = 0.0;
    seg.points[k + 1] = apply(sys, seg.points[k], b);
    seg.norm_factors.push_back(b);
  }
  return seg;
}

Vector complex_mul(std::complex<double> s, const Vector& x) {
  if (x.size() != 2) throw Error(ErrorCode::DimensionMismatch, "complex structure is defined on R^2 only");
  const std::complex<double> z = s * std::complex<double>(x(0), x(1));
  Vector out(2);
  out << z.real(), z.imag();
  return out;
}

double scalar_equivariance_check(const Matrix& T, const Vector& a, std::complex<double> s, const Vector& x, int n) {
  if (T.rows() != 2 || T.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "equivariance is an S^1 property");
  const AffineSphereSystem base(T, a, true);
  const AffineSphereSystem rotated(T, complex_mul(s, a), true);
  const Vector lhs = iterate(rotated, complex_mul(s, x), n);
  const Vector rhs = complex_mul(s, iterate(base, x, n));
  return (lhs - rhs).norm();
}

}  // namespace affsphere
