#include "affsphere/sphere_n.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "affsphere/circle.hpp"
#include "affsphere/error.hpp"
#include "affsphere/io.hpp"

namespace affsphere {

namespace {

constexpr double kNormalizeTol = 1e-8;
constexpr double kPlaneTol = 1e-8;
constexpr double kConvergenceBound = 1e-6;
constexpr long kConvergenceCap = 100000;
constexpr double kMinPairSeparation = 1e-7;
constexpr int kMaxHalvings = 20;
constexpr int kRecenterings = 3;

Matrix stack_columns(const std::vector<Matrix>& parts, Eigen::Index rows) {
  Eigen::Index cols = 0;
  for (const auto& p : parts) cols += p.cols();
  Matrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& p : parts) {
    out.middleCols(at, p.cols()) = p;
    at += p.cols();
  }
  return out;
}

/// Orthonormal basis (columns) of the sum of generalized eigenspaces of the
/// clusters other than `skip`.
Matrix complement_space(const Matrix& T, const std::vector<EigenCluster>& clusters, std::size_t skip) {
  std::vector<Matrix> parts;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (i == skip || clusters[i].value.imag() < 0.0) continue;
    parts.push_back(generalized_eigenspace(T, clusters[i]));
  }
  const Matrix stacked = stack_columns(parts, T.rows());
  Eigen::HouseholderQR<Matrix> qr(stacked);
  return qr.householderQ() * Matrix::Identity(stacked.rows(), stacked.cols());
}

double fixed_point_residual(const AffineSphereSystem& sys, const Vector& x, int period) {
  return (iterate(sys, x, period) - x).norm();
}

Witness periodic_witness(const AffineSphereSystem& sys, const Vector& x, int period) {
  json data{{"point", vector_to_json(x)}, {"residual", fixed_point_residual(sys, x, period)}};
  if (period == 1) return Witness{WitnessKind::FixedPoint, sys, std::move(data), kTolFixedPoint, kDefaultSeed};
  data["period"] = period;
  return Witness{WitnessKind::PeriodicOrbit, sys, std::move(data), kTolFixedPoint, kDefaultSeed};
}

struct Proximal {
  std::size_t cluster;
  double lambda;
};

std::optional<Proximal> proximal_cluster(const std::vector<EigenCluster>& clusters) {
  double dominant = 0.0;
  for (const auto& c : clusters) dominant = std::max(dominant, c.modulus());
  std::optional<Proximal> out;
  int count = 0;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].modulus() >= dominant * (1.0 - 1e-9)) {
      ++count;
      out = Proximal{i, clusters[i].value.real()};
      if (!clusters[i].is_real() || clusters[i].multiplicity != 1) return std::nullopt;
    }
  }
  if (count != 1) return std::nullopt;
  return out;
}

std::optional<NondistalInstance> proximal_instance(const Matrix& T, const std::vector<EigenCluster>& clusters) {
  if (!(T.determinant() > 0.0)) return std::nullopt;
  const auto prox = proximal_cluster(clusters);
  if (!prox || T.rows() < 2) return std::nullopt;
  const double lambda = prox->lambda;
  const Vector v = real_eigenvector(T, lambda);
  const Matrix Tn = T / lambda;
  const AffineSphereSystem sys(Tn, 0.5 * v);
  if (!sys.homeo_certified()) return std::nullopt;

  const Matrix C = complement_space(T, clusters, prox->cluster);
  if (C.cols() == 0) return std::nullopt;
  const Vector x0 = C.col(0).normalized();
  Vector x = x0;
  long m = 0;
  double dist = (x - v).norm();
  while (dist >= kConvergenceBound && m < kConvergenceCap) {
    x = apply(sys, x);
    dist = (x - v).norm();
    ++m;
  }
  if (dist >= kConvergenceBound) return std::nullopt;

  json data{{"x", vector_to_json(x0)},
            {"target", vector_to_json(v)},
            {"iterations", m},
            {"final_distance", dist},
            {"bound", kConvergenceBound},
            {"target_residual", (apply(sys, v) - v).norm()},
            {"original_matrix", matrix_to_json(T)},
            {"scale", lambda}};
  if (m >= 1) {
    const SmLedger ledger = sm_ledger(sys, x0, static_cast<int>(std::min<long>(m, 1000)));
    data["sm"] = json{{"alpha0", ledger.alpha0}, {"m", ledger.s.size()}, {"s_m", ledger.s_m()}};
  }
  Witness w{WitnessKind::ConvergenceToPoint, sys, std::move(data), kTolFixedPoint, kDefaultSeed};
  return NondistalInstance{sys, std::move(w), T, lambda, "proximal"};
}

/// Fixed point on an invariant plane W with restriction B.
std::optional<NondistalInstance> plane_instance(const Matrix& T, const Frame2& W, const Matrix& B, double s0,
                                                const Matrix& original, const char* construction) {
  const auto seed = planar_fixed_point_seed(B, s0);
  if (!seed) return std::nullopt;
  const Vector a = W * seed->a2;
  Vector x = W * seed->x2;
  x.normalize();
  const AffineSphereSystem sys(T, a);
  if (!sys.homeo_certified()) return std::nullopt;
  if (fixed_point_residual(sys, x, 1) > kTolFixedPoint) return std::nullopt;
  return NondistalInstance{sys, periodic_witness(sys, x, 1), original, 1.0, construction};
}

std::optional<NondistalInstance> rotation_instance(const Matrix& T, const std::vector<EigenCluster>& clusters) {
  for (const auto& c : clusters) {
    if (!(c.value.imag() > 0.0)) continue;
    const double t = c.modulus();
    const double cos_theta = c.value.real() / t;
    if (!(cos_theta > 0.0 && cos_theta < 1.0)) continue;
    const Frame2 W = T.rows() == 2 ? Frame2(Frame2::Identity(2, 2)) : complex_pair_plane(T, c.value);
    const Matrix B = W.transpose() * T * W;
    if (auto inst = plane_instance(T, W, B, t * cos_theta, T, "rotation-plane")) return inst;
  }
  return std::nullopt;
}

std::optional<NondistalInstance> real_instance(const Matrix& T, const std::vector<EigenCluster>& clusters) {
  const EigenCluster* positive = nullptr;
  const EigenCluster* negative = nullptr;
  for (const auto& c : clusters) {
    if (!c.is_real()) continue;
    const double v = c.value.real();
    if (v > 0.0 && (!positive || v > positive->value.real())) positive = &c;
    if (v < 0.0 && (!negative || -v > -negative->value.real())) negative = &c;
  }
  if (positive) {
    const double lambda = positive->value.real();
    const Vector v = real_eigenvector(T, lambda);
    const AffineSphereSystem sys(T, 0.5 * lambda * v);
    if (sys.homeo_certified() && fixed_point_residual(sys, v, 1) <= kTolFixedPoint) {
      return NondistalInstance{sys, periodic_witness(sys, v, 1), T, 1.0, "positive-eigenvalue"};
    }
  }
  if (negative) {
    const double mag = -negative->value.real();
    // a multiple hitting lambda1^2 = |a|^2 + lambda2^2 would make the plane map an involution
    double factor = 0.5;
    for (double candidate : {0.5, 1.0 / 3.0, 0.25}) {
      factor = candidate;
      const double forbidden = mag * std::sqrt(1.0 - candidate * candidate);
      const bool clash = std::any_of(clusters.begin(), clusters.end(), [&](const EigenCluster& c) {
        return std::abs(c.modulus() - forbidden) <= 1e-6 * mag;
      });
      if (!clash) break;
    }
    const Vector v = real_eigenvector(T, -mag);
    const AffineSphereSystem sys(T, factor * mag * v);
    if (sys.homeo_certified() && fixed_point_residual(sys, v, 2) <= kTolFixedPoint) {
      return NondistalInstance{sys, periodic_witness(sys, v, 2), T, 1.0, "negative-eigenvalue"};
    }
  }
  return std::nullopt;
}

Matrix matrix_power(const Matrix& T, int k) {
  Matrix S = T;
  for (int i = 1; i < k; ++i) S = S * T;
  return S;
}

double smallest_singular_value(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

std::optional<SearchResult> conjugate_search(const Matrix& T) {
  const auto n = T.rows();
  const auto clusters = eigen_clusters(T);
  const EigenCluster* pair = nullptr;
  for (const auto& c : clusters) {
    if (c.value.imag() > 0.0) {
      pair = &c;
      break;
    }
  }
  const Matrix identity = Matrix::Identity(n, n);
  if (pair == nullptr) {
    if (auto inst = construct_nondistal_instance(T); inst && verify(inst->witness).pass) {
      return SearchResult{T,        SearchKind::Conjugate, 1, identity, inst->system.a(), inst->system, inst->witness,
                          inst->construction};
    }
    return std::nullopt;
  }

  const Frame2 W = n == 2 ? Frame2(Frame2::Identity(2, 2)) : complex_pair_plane(T, pair->value);
  const Matrix B = W.transpose() * T * W;
  // real Jordan basis of B: B [p q] = [p q] [[re, im], [-im, re]]
  Eigen::EigenSolver<Eigen::Matrix2d> es{Eigen::Matrix2d(B)};
  Eigen::Index idx = es.eigenvalues()(0).imag() > 0.0 ? 0 : 1;
  const Eigen::Vector2cd z = es.eigenvectors().col(idx);
  Eigen::Matrix2d V;
  V.col(0) = z.real();
  V.col(1) = z.imag();
  if (std::abs(V.determinant()) < 1e-12) return std::nullopt;
  const double t = pair->modulus();

  for (int e = 1; e <= 8; ++e) {
    const double eps = std::pow(10.0, -e);
    const Eigen::Matrix2d Pp = V * Eigen::Vector2d(1.0, eps).asDiagonal() * V.inverse();
    const Eigen::Matrix2d Pp_inv = Pp.inverse();
    const Matrix Bc = Pp * Eigen::Matrix2d(B) * Pp_inv;
    const Matrix Bc_inv = Bc.inverse();
    const Matrix I2 = Matrix::Identity(2, 2);
    double best_s = 0.0;
    double best_sigma = 1.0;
    for (int g = 0; g <= 160; ++g) {
      const double s0 = t * std::pow(10.0, -4.0 + 0.05 * g);
      const double sigma = smallest_singular_value(s0 * Bc_inv - I2);
      if (sigma < best_sigma) {
        best_sigma = sigma;
        best_s = s0;
      }
    }
    if (!(best_sigma < 0.5)) continue;
    const Matrix P = identity + W * (Matrix(Pp) - I2) * W.transpose();
    const Matrix P_inv = identity + W * (Matrix(Pp_inv) - I2) * W.transpose();
    const Matrix S = P * T * P_inv;
    auto inst = plane_instance(S, W, Bc, best_s, T, "conjugate-rotation-plane");
    if (inst && verify(inst->witness).pass) {
      return SearchResult{S, SearchKind::Conjugate, 1, P, inst->system.a(), inst->system, inst->witness,
                          inst->construction};
    }
  }
  return std::nullopt;
}

/// Orbit stepping restricted to an invariant plane (projection after each step).
struct PlaneOrbit {
  const AffineSphereSystem& sys;
  const Frame2& W;
  double off_plane = 0.0;

  Vector step(const Vector& x, int direction) {
    Vector y = direction >= 0 ? apply(sys, x) : apply_inverse(sys, x);
    const Vector proj = W * (W.transpose() * y);
    off_plane = std::max(off_plane, (y - proj).norm());
    return proj.normalized();
  }
};

struct PairTrial {
  double sup = 0.0;
  /// Orbit point of x where the separation first exceeded delta.
  Vector worst_x;
};

PairTrial run_pair(PlaneOrbit& orbit, const Vector& x, const Vector& y, double delta, int horizon) {
  PairTrial trial;
  trial.sup = (x - y).norm();
  trial.worst_x = x;
  for (int direction : {1, -1}) {
    Vector u = x;
    Vector v = y;
    for (int k = 0; k < horizon; ++k) {
      u = orbit.step(u, direction);
      v = orbit.step(v, direction);
      const double d = (u - v).norm();
      if (d > trial.sup) {
        trial.sup = d;
        trial.worst_x = u;
      }
      if (d >= delta) return trial;
    }
  }
  return trial;
}

}  // namespace

double SmLedger::max_deviation() const {
  double m = 0.0;
  for (double d : deviations) m = std::max(m, d);
  return m;
}

SmLedger sm_ledger(const AffineSphereSystem& sys, const Vector& x, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidPoint, "ledger length must be positive");
  const Matrix& T = sys.T();
  const Vector& a = sys.a();
  if ((T * a - a).norm() > kNormalizeTol * std::max(1.0, a.norm())) {
    throw Error(ErrorCode::NormalizationRequired, "T a != a; divide T by its eigenvalue first");
  }
  require_unit(x, sys.dim());

  SmLedger l;
  const SpectralSummary summary = spectrum(T);
  Matrix Q(sys.dim(), static_cast<Eigen::Index>(summary.contraction_basis.size()));
  for (std::size_t j = 0; j < summary.contraction_basis.size(); ++j) {
    Q.col(static_cast<Eigen::Index>(j)) = summary.contraction_basis[j];
  }
  const Vector a_perp = a - Q * (Q.transpose() * a);
  l.alpha0 = a_perp.norm();
  l.a0 = l.alpha0 > 0.0 ? Vector(a_perp / l.alpha0) : Vector::Zero(sys.dim());
  l.x_in_contraction_space = (x - Q * (Q.transpose() * x)).norm() <= kNormalizeTol;

  l.s.push_back(1.0);
  Vector Tmx = T * x;
  Vector direct = apply(sys, x);
  l.deviations.push_back(((l.s.back() * a + Tmx).normalized() - direct).norm());
  for (int k = 1; k < m; ++k) {
    const double alpha = (l.s.back() * a + Tmx).norm();
    l.alphas.push_back(alpha);
    l.s.push_back(l.s.back() + alpha);
    Tmx = T * Tmx;
    direct = apply(sys, direct);
    l.deviations.push_back(((l.s.back() * a + Tmx).normalized() - direct).norm());
  }

  l.divergence_bound_holds = true;
  for (std::size_t k = 0; k < l.s.size(); ++k) {
    l.divergence_bound_holds = l.divergence_bound_holds && l.s[k] >= 1.0 + static_cast<double>(k) * l.alpha0 - 1e-8;
  }
  for (std::size_t k = 0; k < l.deviations.size(); ++k) {
    if (l.deviations[k] > 1e-8 * static_cast<double>(k + 1)) {
      throw Error(ErrorCode::InternalInconsistency, "closed form drifts from direct iteration at m = " +
                                                        std::to_string(k + 1));
    }
  }
  if (l.x_in_contraction_space && !l.divergence_bound_holds) {
    throw Error(ErrorCode::InternalInconsistency, "s_m fell below 1 + (m - 1) alpha0");
  }
  return l;
}

json ledger_to_json(const SmLedger& l) {
  json s = json::array();
  for (double v : l.s) s.push_back(v);
  json alphas = json::array();
  for (double v : l.alphas) alphas.push_back(v);
  return json{{"s", s},
              {"alphas", alphas},
              {"alpha0", l.alpha0},
              {"max_deviation", l.max_deviation()},
              {"x_in_contraction_space", l.x_in_contraction_space},
              {"divergence_bound_holds", l.divergence_bound_holds}};
}

std::optional<PlanarFixedPointSeed> planar_fixed_point_seed(const Matrix& B, double s0) {
  if (B.rows() != 2 || B.cols() != 2 || !(s0 > 0.0)) return std::nullopt;
  const Matrix B_inv = invert(B);
  Eigen::JacobiSVD<Matrix> svd(s0 * B_inv - Matrix::Identity(2, 2), Eigen::ComputeFullV);
  const double sigma = svd.singularValues()(1);
  if (!(sigma < 1.0 - 1e-6)) return std::nullopt;
  const Vector x2 = svd.matrixV().col(1);
  const Vector u = B_inv * x2;
  const double target = 0.5 * (1.0 + sigma);
  const double uu = u.squaredNorm();
  const double ux = u.dot(x2);
  const double disc = ux * ux - uu * (1.0 - target * target);
  if (!(disc > 0.0)) return std::nullopt;
  const double s = (ux + std::sqrt(disc)) / uu;
  if (!(s > 0.0)) return std::nullopt;
  PlanarFixedPointSeed out;
  out.x2 = x2;
  out.s = s;
  out.a2 = s * x2 - B * x2;
  out.inverse_offset_norm = (B_inv * out.a2).norm();
  return out;
}

std::optional<NondistalInstance> construct_nondistal_instance(const Matrix& T) {
  if (T.rows() != T.cols() || T.rows() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "matrix must be square with dim >= 2");
  }
  invert(T);
  const auto clusters = eigen_clusters(T);
  if (auto inst = proximal_instance(T, clusters)) return inst;
  if (auto inst = rotation_instance(T, clusters)) return inst;
  if (auto inst = real_instance(T, clusters)) return inst;
  return std::nullopt;
}

std::string_view to_string(SearchKind k) { return k == SearchKind::Power ? "Power" : "Conjugate"; }

SearchResult conjugate_or_power_search(const Matrix& T, SearchMode mode, std::uint64_t seed) {
  if (T.rows() != T.cols() || T.rows() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "matrix must be square with dim >= 2");
  }
  invert(T);
  const Matrix identity = Matrix::Identity(T.rows(), T.rows());
  if (mode == SearchMode::Power) {
    for (int k = 1; k <= 3; ++k) {
      const Matrix S = matrix_power(T, k);
      auto inst = construct_nondistal_instance(S);
      if (!inst || !verify(inst->witness).pass) continue;
      inst->witness.seed = seed;
      return SearchResult{S, SearchKind::Power, k, identity, inst->system.a(), inst->system, inst->witness,
                          inst->construction};
    }
  }
  if (auto r = conjugate_search(T)) {
    r->witness.seed = seed;
    return *r;
  }
  throw Error(ErrorCode::SearchExhausted, "no power or conjugate of T admits a witness");
}

json search_to_json(const SearchResult& r) {
  return json{{"S", matrix_to_json(r.S)},
              {"kind", std::string(to_string(r.kind))},
              {"power", r.power},
              {"conjugator", matrix_to_json(r.conjugator)},
              {"offset", vector_to_json(r.a)},
              {"construction", r.construction},
              {"witness", witness_to_json(r.witness)}};
}

std::optional<Frame2> plane_containing_offset(const AffineSphereSystem& sys) {
  const Matrix& T = sys.T();
  const Vector& a = sys.a();
  const double inv_tol = kPlaneTol * std::max(1.0, T.norm());
  const double in_tol = kPlaneTol * std::max(1.0, a.norm());
  for (const Frame2& W : invariant_2planes(T)) {
    if (plane_invariance_residual(T, W) > inv_tol) continue;
    if ((a - W * (W.transpose() * a)).norm() <= in_tol) return W;
  }
  // a an eigenvector: pair it with a second eigendirection
  const double alpha = a.norm();
  if (!(alpha > 0.0)) return std::nullopt;
  const Vector u = a / alpha;
  const double lambda = u.dot(T * u);
  if ((T * u - lambda * u).norm() > inv_tol) return std::nullopt;
  const auto n = T.rows();
  Eigen::JacobiSVD<Matrix> svd(T - lambda * Matrix::Identity(n, n), Eigen::ComputeFullV);
  std::vector<Vector> partners;
  for (Eigen::Index k = n - 1; k >= 0 && svd.singularValues()(k) <= inv_tol; --k) {
    partners.push_back(svd.matrixV().col(k));
  }
  for (const auto& c : eigen_clusters(T)) {
    if (c.is_real() && std::abs(c.value.real() - lambda) > 1e-6 * std::max(1.0, std::abs(lambda))) {
      partners.push_back(real_eigenvector(T, c.value.real()));
    }
  }
  for (const Vector& v : partners) {
    const Vector w = v - u * u.dot(v);
    if (w.norm() < 1e-6) continue;
    const Frame2 W = make_frame(u, w);
    if (plane_invariance_residual(T, W) <= inv_tol) return W;
  }
  return std::nullopt;
}

Witness nonexpansive_witness(const AffineSphereSystem& sys, double delta, int horizon, std::uint64_t seed) {
  const auto W = plane_containing_offset(sys);
  if (!W) throw Error(ErrorCode::WitnessNotFound, "the offset lies in no invariant 2-plane");
  return nonexpansive_witness(sys, *W, delta, horizon, seed);
}

Witness nonexpansive_witness(const AffineSphereSystem& sys, const Frame2& plane, double delta, int horizon,
                             std::uint64_t seed) {
  if (!sys.homeo_certified()) throw Error(ErrorCode::HomeoConditionViolated, "backward orbits need ||T^-1 a|| < 1");
  if (!(delta > 0.0) || horizon < 0) throw Error(ErrorCode::InvalidPoint, "need delta > 0 and horizon >= 0");
  if (plane.rows() != sys.dim()) throw Error(ErrorCode::DimensionMismatch, "plane lives in the wrong dimension");
  const Frame2 W = make_frame(plane.col(0), plane.col(1));
  const Matrix& T = sys.T();
  const Vector& a = sys.a();
  if (plane_invariance_residual(T, W) > kPlaneTol * std::max(1.0, T.norm())) {
    throw Error(ErrorCode::WitnessNotFound, "plane is not invariant under T");
  }
  if ((a - W * (W.transpose() * a)).norm() > kPlaneTol * std::max(1.0, a.norm())) {
    throw Error(ErrorCode::WitnessNotFound, "offset does not lie in the plane");
  }

  // base point: middle of the arc leaving an attracting fixed point of the restriction
  const AffineSphereSystem restricted(W.transpose() * T * W, W.transpose() * a);
  std::optional<double> base;
  if (restricted.homeo_certified() && !is_identity_power(restricted, 1)) {
    const auto records = fixed_points_numeric(restricted, 1);
    std::vector<double> angles;
    for (const auto& r : records) angles.push_back(std::atan2(r.point(1), r.point(0)));
    for (const auto& r : records) {
      if (r.stability != Stability::Attracting) continue;
      const double phi = std::atan2(r.point(1), r.point(0));
      double gap = 2.0 * std::numbers::pi;
      for (double other : angles) {
        const double d = std::remainder(other - phi, 2.0 * std::numbers::pi);
        const double ccw = d > 0.0 ? d : d + 2.0 * std::numbers::pi;
        if (ccw > 1e-12) gap = std::min(gap, ccw);
      }
      base = phi + 0.5 * gap;
      break;
    }
  }
  if (!base) {
    std::mt19937_64 rng(seed);
    base = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  }

  PlaneOrbit orbit{sys, W};
  double s = 0.5 * delta;
  for (int halving = 0; halving <= kMaxHalvings && s >= kMinPairSeparation; ++halving, s *= 0.5) {
    double phi = *base;
    const double psi = 2.0 * std::asin(std::min(1.0, s / 2.0));
    for (int r = 0; r <= kRecenterings; ++r) {
      const Vector x = W * Eigen::Vector2d(std::cos(phi), std::sin(phi));
      const Vector y = W * Eigen::Vector2d(std::cos(phi + psi), std::sin(phi + psi));
      const PairTrial trial = run_pair(orbit, x, y, delta, horizon);
      if (orbit.off_plane >= kPlaneTol) {
        throw Error(ErrorCode::WitnessNotFound, "orbit leaves the invariant plane");
      }
      if (trial.sup < delta) {
        json data{{"x", vector_to_json(x)},
                  {"y", vector_to_json(y)},
                  {"plane", frame_to_json(W)},
                  {"delta", delta},
                  {"horizon", horizon},
                  {"sup_distance", trial.sup},
                  {"initial_separation", (x - y).norm()},
                  {"min_separation", kMinPairSeparation}};
        return Witness{WitnessKind::NonExpansivePair, sys, std::move(data), kTolFixedPoint, seed};
      }
      const Eigen::Vector2d c = W.transpose() * trial.worst_x;
      const double next = std::atan2(c(1), c(0));
      if (std::abs(std::remainder(next - phi, 2.0 * std::numbers::pi)) < 1e-15) break;
      phi = next;
    }
  }
  throw Error(ErrorCode::WitnessNotFound, "no pair stays delta-close at separation >= 1e-7");
}

}  // namespace affsphere
