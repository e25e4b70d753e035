#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library: the map, its inverse and the fixed-point scans are redone from
// scratch with plain Eigen.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline Vec map(const Mat& T, const Vec& a, const Vec& x) {
  const Vec y = a + T * x;
  return y / y.norm();
}

/// Preimage of y: x = T^-1 (t y - a) with t > 0 solving ||T^-1 (t y - a)|| = 1.
inline Vec inverse_map(const Mat& T, const Vec& a, const Vec& y) {
  const Eigen::PartialPivLU<Mat> lu(T);
  const Vec u = lu.solve(y);
  const Vec b = lu.solve(a);
  const double A = u.squaredNorm();
  const double B = -2.0 * u.dot(b);
  const double C = b.squaredNorm() - 1.0;
  const double t = (-B + std::sqrt(B * B - 4.0 * A * C)) / (2.0 * A);
  const Vec x = lu.solve(t * y - a);
  return x / x.norm();
}

inline Vec map_power(const Mat& T, const Vec& a, Vec x, int p) {
  for (int i = 0; i < p; ++i) x = map(T, a, x);
  return x;
}

inline Vec unit_at(double phi) {
  Vec x(2);
  x << std::cos(phi), std::sin(phi);
  return x;
}

inline double wrap(double phi) { return std::remainder(phi, 2.0 * std::numbers::pi); }

inline Mat rot(double theta) {
  Mat r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

/// Zeros of phi -> wrap(angle(f^p(e^{i phi})) - phi) found by a dense scan of
/// n cells with bisection. Only sign changes through zero count (jumps at
/// +-pi are skipped).
inline std::vector<Vec> periodic_points(const Mat& T, const Vec& a, int p, int n = 20000) {
  auto g = [&](double phi) {
    const Vec y = map_power(T, a, unit_at(phi), p);
    return wrap(std::atan2(y(1), y(0)) - phi);
  };
  std::vector<Vec> out;
  const double h = 2.0 * std::numbers::pi / n;
  double lo = 0.0;
  double glo = g(lo);
  for (int i = 1; i <= n; ++i) {
    const double hi = i * h;
    const double ghi = g(hi);
    if (glo == 0.0) {
      out.push_back(unit_at(lo));
    } else if (glo * ghi < 0.0 && std::abs(glo - ghi) < 1.0) {
      double l = lo, r = hi, gl = glo;
      for (int k = 0; k < 80; ++k) {
        const double m = 0.5 * (l + r);
        const double gm = g(m);
        if (gm * gl <= 0.0) {
          r = m;
        } else {
          l = m;
          gl = gm;
        }
      }
      out.push_back(unit_at(0.5 * (l + r)));
    }
    lo = hi;
    glo = ghi;
  }
  return out;
}

/// Points of minimal period p among the period-p zeros.
inline std::vector<Vec> minimal_periodic_points(const Mat& T, const Vec& a, int p, int n = 20000) {
  std::vector<Vec> out;
  for (const Vec& x : periodic_points(T, a, p, n)) {
    bool minimal = true;
    for (int d = 1; d < p; ++d) {
      if (p % d == 0 && (map_power(T, a, x, d) - x).norm() < 1e-6) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

/// |d/dphi| of the angle map of f^p by central differences.
inline double multiplier(const Mat& T, const Vec& a, const Vec& x, int p, double h = 1e-6) {
  const double phi = std::atan2(x(1), x(0));
  const Vec yp = map_power(T, a, unit_at(phi + h), p);
  const Vec ym = map_power(T, a, unit_at(phi - h), p);
  return std::abs(wrap(std::atan2(yp(1), yp(0)) - std::atan2(ym(1), ym(0)))) / (2.0 * h);
}

/// Closed form in the frame a = (0, alpha): (-sin/alpha, +-sqrt(alpha^2 - sin^2)/alpha).
inline std::vector<Vec> rotation_fixed_points_canonical(double theta, double alpha) {
  const double s = std::sin(theta);
  const double disc = alpha * alpha - s * s;
  if (disc < 0.0 || std::cos(theta) < 0.0) return {};
  Vec q(2), p(2);
  q << -s / alpha, std::sqrt(disc) / alpha;
  p << -s / alpha, -std::sqrt(disc) / alpha;
  return {q, p};
}

inline bool contains(const std::vector<Vec>& pts, const Vec& x, double tol) {
  for (const Vec& p : pts) {
    if ((p - x).norm() < tol) return true;
  }
  return false;
}

inline Mat random_matrix(int dim, std::mt19937_64& rng, double min_sigma = 0.2) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Mat m(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) m(i, j) = n(rng);
    }
    Eigen::JacobiSVD<Mat> svd(m);
    if (svd.singularValues()(dim - 1) > min_sigma) return m;
  }
}

inline Vec random_unit(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec x(dim);
  for (int i = 0; i < dim; ++i) x(i) = n(rng);
  return x / x.norm();
}

inline double smallest_singular(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(m.rows() - 1);
}

}  // namespace oracle
