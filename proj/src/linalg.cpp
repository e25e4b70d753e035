#include "affsphere/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "affsphere/error.hpp"

namespace affsphere {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " needs a non-empty square matrix");
  }
}

// Roots of z^2 + b z + c with the cancellation-free branch.
std::pair<Complex, Complex> quadratic_roots(double b, double c) {
  const double half = -0.5 * b;
  const double disc = half * half - c;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    const double big = half + std::copysign(s, half);
    if (big == 0.0) return {0.0, 0.0};
    return {big, c / big};
  }
  const double s = std::sqrt(-disc);
  return {Complex(half, s), Complex(half, -s)};
}

Complex cubic_value(const Complex& z, double b, double c, double d) { return ((z + b) * z + c) * z + d; }

Complex polish_cubic_root(Complex z, double b, double c, double d) {
  for (int it = 0; it < 4; ++it) {
    const Complex f = cubic_value(z, b, c, d);
    const Complex df = (3.0 * z + 2.0 * b) * z + c;
    if (std::abs(df) < 1e-300) break;
    const Complex next = z - f / df;
    if (std::abs(cubic_value(next, b, c, d)) >= std::abs(f)) break;
    z = next;
  }
  return z;
}

std::vector<Complex> eigenvalues_dim3(const Matrix& m) {
  // z^3 + b z^2 + c z + d = det(zI - M)
  const double b = -m.trace();
  const double c = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                   m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  const double d = -m.determinant();

  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double shift = -b / 3.0;
  const double disc = q * q / 4.0 + p * p * p / 27.0;

  std::vector<Complex> roots;
  if (disc > 0.0) {
    const double s = std::sqrt(disc);
    const double real_root = std::cbrt(-0.5 * q + s) + std::cbrt(-0.5 * q - s) + shift;
    const Complex r = polish_cubic_root(real_root, b, c, d);
    const double rr = r.real();
    // deflate: (z - rr)(z^2 + bb z + cc)
    const double bb = b + rr;
    const double cc = c + rr * bb;
    auto [z1, z2] = quadratic_roots(bb, cc);
    z1 = polish_cubic_root(z1, b, c, d);
    if (z1.imag() != 0.0) {
      z2 = std::conj(z1);
    } else {
      z2 = polish_cubic_root(z2, b, c, d);
    }
    roots = {rr, z1, z2};
  } else if (p == 0.0) {
    roots = {shift, shift, shift};
  } else {
    const double mag = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * mag), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      const double z = mag * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) + shift;
      roots.push_back(polish_cubic_root(z, b, c, d).real());
    }
  }
  return roots;
}

bool complex_less(const Complex& x, const Complex& y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

// Basis of the (numerical) kernel of the given power of a matrix.
Matrix kernel_of_power(const Matrix& base, int power, int kernel_dim) {
  const auto n = base.rows();
  if (kernel_dim >= n) return Matrix::Identity(n, n);
  Matrix acc = Matrix::Identity(n, n);
  for (int k = 0; k < power; ++k) {
    acc = acc * base;
    const double scale = acc.norm();
    if (scale > 0.0) acc /= scale;
  }
  Eigen::JacobiSVD<Matrix> svd(acc, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(kernel_dim);
}

Matrix orthonormal_columns(const Matrix& stacked) {
  if (stacked.cols() == 0) return stacked;
  Eigen::HouseholderQR<Matrix> qr(stacked);
  return qr.householderQ() * Matrix::Identity(stacked.rows(), stacked.cols());
}

Vector deterministic_sign(Vector v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  if (v(idx) < 0.0) v = -v;
  return v;
}

// Invariant plane inside the generalized eigenspace of a real cluster with
// multiplicity >= 2.
Frame2 real_cluster_plane(const Matrix& m, double lambda) {
  const auto n = m.rows();
  const Matrix a = m - lambda * Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = std::max(1.0, sv(0));
  if (n >= 2 && sv(n - 2) <= 1e-9 * scale) {
    return make_frame(svd.matrixV().col(n - 1), svd.matrixV().col(n - 2));
  }
  const Matrix basis = kernel_of_power(a, 2, 2);
  return make_frame(basis.col(1), basis.col(0));
}

std::vector<Frame2> candidate_planes(const Matrix& m, const std::vector<EigenCluster>& clusters) {
  const auto n = m.rows();
  std::vector<Frame2> out;
  if (n == 2) {
    out.push_back(Frame2::Identity(2, 2));
    return out;
  }
  // complex pairs first, ascending modulus
  for (const auto& c : clusters) {
    if (c.value.imag() > 0.0) out.push_back(complex_pair_plane(m, c.value));
  }
  // real eigenvalues with multiplicity, ascending modulus
  struct RealEntry {
    std::size_t cluster;
    double value;
  };
  std::vector<RealEntry> reals;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (!clusters[i].is_real()) continue;
    for (int k = 0; k < clusters[i].multiplicity; ++k) reals.push_back({i, clusters[i].value.real()});
  }
  std::stable_sort(reals.begin(), reals.end(),
                   [](const RealEntry& x, const RealEntry& y) { return std::abs(x.value) < std::abs(y.value); });
  std::vector<Vector> eigvecs(clusters.size());
  for (std::size_t i = 0; i < reals.size(); ++i) {
    for (std::size_t j = i + 1; j < reals.size(); ++j) {
      if (reals[i].cluster == reals[j].cluster) {
        out.push_back(real_cluster_plane(m, reals[i].value));
      } else {
        for (auto idx : {reals[i].cluster, reals[j].cluster}) {
          if (eigvecs[idx].size() == 0) eigvecs[idx] = real_eigenvector(m, clusters[idx].value.real());
        }
        out.push_back(make_frame(eigvecs[reals[i].cluster], eigvecs[reals[j].cluster]));
      }
    }
  }
  return out;
}

}  // namespace

Matrix invert(const Matrix& m, double tol_singular) {
  require_square(m, "invert");
  Eigen::FullPivLU<Matrix> lu(m);
  const double det = lu.determinant();
  if (!(std::abs(det) > tol_singular)) {
    throw Error(ErrorCode::SingularMatrix, "|det| = " + std::to_string(std::abs(det)));
  }
  return lu.inverse();
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  const auto n = m.cols();
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = dist(rng);
  v.normalize();

  constexpr int kMaxIterations = 10000;
  constexpr double kRelTol = 1e-10;
  for (int it = 0; it < kMaxIterations; ++it) {
    const Vector w = m.transpose() * (m * v);
    const double mu = v.dot(w);
    if (mu <= 0.0) return 0.0;  // v in kernel, so m == 0 on the Krylov space
    const double residual = (w - mu * v).norm();
    if (residual <= kRelTol * mu) return std::sqrt(mu);
    v = w / w.norm();
  }
  throw Error(ErrorCode::ConvergenceFailure, "power iteration did not reach relative tolerance 1e-10");
}

std::vector<Complex> eigenvalues(const Matrix& m) {
  require_square(m, "eigenvalues");
  const auto n = m.rows();
  if (n == 1) return {m(0, 0)};
  if (n == 2) {
    auto [z1, z2] = quadratic_roots(-m.trace(), m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    return {z1, z2};
  }
  if (n == 3) return eigenvalues_dim3(m);

  Eigen::EigenSolver<Matrix> solver;
  solver.setMaxIterations(500);
  solver.compute(m, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "real Schur iteration did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<EigenCluster> eigen_clusters(const Matrix& m) {
  auto raw = eigenvalues(m);
  std::sort(raw.begin(), raw.end(), complex_less);

  struct Acc {
    Complex sum;
    int count;
    Complex center() const { return sum / static_cast<double>(count); }
  };
  std::vector<Acc> acc;
  for (const auto& z : raw) {
    bool merged = false;
    for (auto& a : acc) {
      const Complex c = a.center();
      if (std::abs(z - c) <= kClusterTol * std::max(1.0, std::abs(c))) {
        a.sum += z;
        ++a.count;
        merged = true;
        break;
      }
    }
    if (!merged) acc.push_back({z, 1});
  }

  std::vector<EigenCluster> clusters;
  for (const auto& a : acc) {
    Complex c = a.center();
    if (std::abs(c.imag()) <= 1e-9 * std::max(1.0, std::abs(c))) c = c.real();
    clusters.push_back({c, a.count});
  }
  // make conjugate clusters exact mirror images
  for (auto& upper : clusters) {
    if (upper.value.imag() <= 0.0) continue;
    for (auto& lower : clusters) {
      if (lower.value.imag() >= 0.0) continue;
      if (std::abs(lower.value - std::conj(upper.value)) <= kClusterTol * std::max(1.0, upper.modulus())) {
        const Complex mid = 0.5 * (upper.value + std::conj(lower.value));
        upper.value = mid;
        lower.value = std::conj(mid);
        break;
      }
    }
  }
  std::sort(clusters.begin(), clusters.end(), [](const EigenCluster& x, const EigenCluster& y) {
    if (x.modulus() != y.modulus()) return x.modulus() < y.modulus();
    return std::arg(x.value) < std::arg(y.value);
  });
  return clusters;
}

Matrix generalized_eigenspace(const Matrix& m, const EigenCluster& cluster) {
  const auto n = m.rows();
  const Matrix id = Matrix::Identity(n, n);
  if (cluster.is_real()) {
    return orthonormal_columns(kernel_of_power(m - cluster.value.real() * id, cluster.multiplicity, cluster.multiplicity));
  }
  const double re = cluster.value.real();
  const double mod2 = std::norm(cluster.value);
  const Matrix quad = m * m - 2.0 * re * m + mod2 * id;
  return orthonormal_columns(kernel_of_power(quad, cluster.multiplicity, 2 * cluster.multiplicity));
}

SpectralSummary spectrum(const Matrix& m) {
  require_square(m, "spectrum");
  SpectralSummary out;
  out.clusters = eigen_clusters(m);

  for (const auto& c : out.clusters) {
    const double gap = std::abs(c.modulus() - 1.0);
    if (gap > 1e-12 && gap < kTolUnit) {
      throw Error(ErrorCode::NearUnitModulusAmbiguity, "eigenvalue modulus " + std::to_string(c.modulus()) +
                                                           " lies within tol_unit of 1");
    }
    for (int k = 0; k < c.multiplicity; ++k) out.eigenvalues.push_back(c.value);
    out.dominant_modulus = std::max(out.dominant_modulus, c.modulus());
  }

  int dominant_clusters = 0;
  const EigenCluster* dominant = nullptr;
  for (const auto& c : out.clusters) {
    if (c.modulus() >= out.dominant_modulus * (1.0 - 1e-9)) {
      ++dominant_clusters;
      dominant = &c;
    }
  }
  out.is_proximal = dominant_clusters == 1 && dominant->is_real() && dominant->multiplicity == 1;

  const auto n = m.rows();
  auto collect = [&](auto predicate) {
    std::vector<Matrix> parts;
    Eigen::Index cols = 0;
    for (const auto& c : out.clusters) {
      if (!predicate(c.modulus())) continue;
      if (c.value.imag() < 0.0) continue;  // the upper conjugate covers the pair
      parts.push_back(generalized_eigenspace(m, c));
      cols += parts.back().cols();
    }
    Matrix stacked(n, cols);
    Eigen::Index at = 0;
    for (const auto& p : parts) {
      stacked.middleCols(at, p.cols()) = p;
      at += p.cols();
    }
    const Matrix q = orthonormal_columns(stacked);
    std::vector<Vector> basis;
    for (Eigen::Index j = 0; j < q.cols(); ++j) basis.push_back(q.col(j));
    return basis;
  };
  out.contraction_basis = collect([](double mod) { return mod < 1.0 - kTolUnit; });
  out.expansion_basis = collect([](double mod) { return mod > 1.0 + kTolUnit; });
  out.invariant_2planes = candidate_planes(m, out.clusters);
  return out;
}

double plane_invariance_residual(const Matrix& m, const Frame2& w) {
  const Matrix mw = m * w;
  return (mw - w * (w.transpose() * mw)).norm();
}

Frame2 invariant_2plane(const Matrix& m) {
  require_square(m, "invariant_2plane");
  if (m.rows() < 2) throw Error(ErrorCode::DimensionMismatch, "invariant_2plane needs dim >= 2");
  if (m.rows() == 2) return Frame2::Identity(2, 2);
  const auto candidates = candidate_planes(m, eigen_clusters(m));
  const double tol = 1e-8 * std::max(1.0, m.norm());
  const Frame2* best = nullptr;
  double best_residual = 0.0;
  for (const auto& f : candidates) {
    const double r = plane_invariance_residual(m, f);
    if (r < tol) return f;
    if (!best || r < best_residual) {
      best = &f;
      best_residual = r;
    }
  }
  return *best;
}

std::vector<Frame2> invariant_2planes(const Matrix& m) {
  require_square(m, "invariant_2planes");
  return candidate_planes(m, eigen_clusters(m));
}

Vector real_eigenvector(const Matrix& m, double lambda) {
  const auto n = m.rows();
  Eigen::JacobiSVD<Matrix> svd(m - lambda * Matrix::Identity(n, n), Eigen::ComputeFullV);
  return deterministic_sign(svd.matrixV().col(n - 1));
}

Frame2 complex_pair_plane(const Matrix& m, Complex lambda) {
  const auto n = m.rows();
  const Matrix quad = m * m - 2.0 * lambda.real() * m + std::norm(lambda) * Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(quad, Eigen::ComputeFullV);
  const Vector v = deterministic_sign(svd.matrixV().col(n - 1));
  return make_frame(v, m * v);
}

Frame2 make_frame(const Vector& u, const Vector& v) {
  Frame2 f(u.size(), 2);
  f.col(0) = u.normalized();
  Vector w = v - f.col(0).dot(v) * f.col(0);
  if (w.norm() < 1e-12 * std::max(1.0, v.norm())) {
    // v is parallel to u: complete with the least-aligned coordinate axis
    Eigen::Index idx = 0;
    f.col(0).cwiseAbs().minCoeff(&idx);
    w = Vector::Unit(u.size(), idx);
    w -= f.col(0).dot(w) * f.col(0);
  }
  f.col(1) = w.normalized();
  return f;
}

Matrix rotation(double theta) {
  Matrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

}  // namespace affsphere
