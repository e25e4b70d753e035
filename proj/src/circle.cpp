#include "affsphere/circle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "affsphere/error.hpp"

namespace affsphere {

namespace {

using Vec2 = Eigen::Vector2d;
using std::numbers::pi;

constexpr double kTwoPi = 2.0 * pi;
constexpr double kDedupTol = 1e-8;
constexpr double kBisectWidth = 1e-13;
constexpr double kIdentityTol = 1e-10;
constexpr double kAlignTol = 1e-9;
constexpr double kPairMinSeparation = 1e-3;
constexpr double kPairBound = 1e-6;

double wrap(double d) { return std::remainder(d, kTwoPi); }

Vec2 on_circle(double phi) { return Vec2(std::cos(phi), std::sin(phi)); }

double arg(const Vec2& x) { return std::atan2(x(1), x(0)); }

/// Allocation-free planar kernel for the scans.
struct Planar {
  Eigen::Matrix2d T;
  Vec2 a;

  explicit Planar(const AffineSphereSystem& sys) : T(sys.T()), a(sys.a()) {}

  Vec2 step(const Vec2& x) const {
    const Vec2 y = a + T * x;
    return y / y.norm();
  }

  Vec2 power(Vec2 x, int p) const {
    for (int k = 0; k < p; ++k) x = step(x);
    return x;
  }

  /// Wrapped angle displacement of f^p at phi.
  double displacement(double phi, int p) const { return wrap(arg(power(on_circle(phi), p)) - phi); }
};

void require_circle(const AffineSphereSystem& sys) {
  if (sys.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "circle dynamics needs dim = 2");
}

void require_certified(const AffineSphereSystem& sys) {
  if (!sys.homeo_certified()) throw Error(ErrorCode::HomeoConditionViolated, "circle analysis needs ||T^-1 a|| < 1");
}

double checked_alpha(const Vector& a) {
  if (a.size() != 2) throw Error(ErrorCode::DimensionMismatch, "offset must lie in R^2");
  const double alpha = a.norm();
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::InvalidAlpha, "need 0 < ||a|| < 1, got " + std::to_string(alpha));
  }
  return alpha;
}

/// Unit complex s with s * (0, alpha) = a.
Complex canonical_rotation(const Vector& a, double alpha) {
  return Complex(0.0, -1.0) * Complex(a(0), a(1)) / alpha;
}

FixedPointRecord make_record(const AffineSphereSystem& sys, const Vector& x, int period, double multiplier) {
  FixedPointRecord r;
  r.point = x;
  r.period = period;
  r.residual = (iterate(sys, x, period) - x).norm();
  r.multiplier = multiplier;
  r.stability = stability_from_multiplier(multiplier);
  return r;
}

int minimal_period(const Planar& k, const Vec2& x, int period) {
  for (int d = 1; d < period; ++d) {
    if (period % d == 0 && (k.power(x, d) - x).norm() < kDedupTol) return d;
  }
  return period;
}

double bisect(const Planar& k, double lo, double hi, double g_lo, int p) {
  while (hi - lo > kBisectWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = k.displacement(mid, p);
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Root angles of the displacement of f^p on an n-point grid, ascending.
std::vector<double> scan_roots(const Planar& k, int p, int n, double* max_abs) {
  std::vector<double> g(static_cast<std::size_t>(n) + 1);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    g[static_cast<std::size_t>(i)] = k.displacement(kTwoPi * i / n, p);
    worst = std::max(worst, std::abs(g[static_cast<std::size_t>(i)]));
  }
  g[static_cast<std::size_t>(n)] = g[0];
  if (max_abs != nullptr) *max_abs = worst;

  std::vector<double> roots;
  const double half_pi = 0.5 * pi;
  for (int i = 0; i < n; ++i) {
    const double g0 = g[static_cast<std::size_t>(i)];
    const double g1 = g[static_cast<std::size_t>(i) + 1];
    if (g0 == 0.0) {
      roots.push_back(kTwoPi * i / n);
      continue;
    }
    // a sign change with |g| near pi is the branch cut of the wrap, not a root
    if ((g0 < 0.0) != (g1 < 0.0) && g1 != 0.0 && std::abs(g0) < half_pi && std::abs(g1) < half_pi) {
      roots.push_back(bisect(k, kTwoPi * i / n, kTwoPi * (i + 1) / n, g0, p));
    }
  }
  return roots;
}

double min_circular_gap(const std::vector<double>& roots) {
  if (roots.size() < 2) return kTwoPi;
  double gap = kTwoPi - (roots.back() - roots.front());
  for (std::size_t i = 1; i < roots.size(); ++i) gap = std::min(gap, roots[i] - roots[i - 1]);
  return gap;
}

Vector step_pair(const AffineSphereSystem& sys, const Vector& x, int direction) {
  return direction >= 0 ? apply(sys, x) : apply_inverse(sys, x);
}

}  // namespace

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Attracting:
      return "Attracting";
    case Stability::Repelling:
      return "Repelling";
    case Stability::Neutral:
      return "Neutral";
    case Stability::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

json record_to_json(const FixedPointRecord& r) {
  return json{{"point", vector_to_json(r.point)},
              {"period", r.period},
              {"residual", r.residual},
              {"stability", std::string(to_string(r.stability))},
              {"multiplier", r.multiplier}};
}

json involution_to_json(const InvolutionReport& r) {
  return json{{"is_involution", r.is_involution}, {"condition_i", r.condition_i},
              {"condition_ii", r.condition_ii},   {"condition_iii", r.condition_iii},
              {"lambda1", r.lambda1},             {"lambda2", r.lambda2},
              {"max_residual", r.max_residual},   {"samples", r.samples}};
}

Stability stability_from_multiplier(double multiplier) {
  if (!std::isfinite(multiplier)) return Stability::Undetermined;
  if (multiplier < 1.0 - kTolMultiplier) return Stability::Attracting;
  if (multiplier > 1.0 + kTolMultiplier) return Stability::Repelling;
  return Stability::Neutral;
}

double angle_derivative(const AffineSphereSystem& sys, const Vector& x, int period) {
  require_circle(sys);
  const Planar k(sys);
  Vec2 p = x;
  double d = 1.0;
  for (int i = 0; i < period; ++i) {
    const Vec2 y = k.a + k.T * p;
    const Vec2 dy = k.T * Vec2(-p(1), p(0));
    d *= (y(0) * dy(1) - y(1) * dy(0)) / y.squaredNorm();
    p = y / y.norm();
  }
  return d;
}

double angle_derivative_numeric(const AffineSphereSystem& sys, const Vector& x, int period, double h) {
  require_circle(sys);
  const Planar k(sys);
  const double phi = arg(x);
  const Vec2 up = k.power(on_circle(phi + h), period);
  const Vec2 down = k.power(on_circle(phi - h), period);
  return wrap(arg(up) - arg(down)) / (2.0 * h);
}

InvolutionReport involution_check(const AffineSphereSystem& sys, int samples) {
  require_circle(sys);
  require_certified(sys);
  const double alpha = sys.alpha();
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidAlpha, "involution criterion needs a nonzero offset");

  InvolutionReport r;
  r.samples = samples;
  const Matrix& T = sys.T();
  const double scale = std::max(1.0, T.norm());
  const Vector u = sys.a() / alpha;
  const Vector v = Eigen::Vector2d(-u(1), u(0));
  const Vector Tu = T * u;
  const Vector Tv = T * v;
  r.lambda1 = Tu.dot(u);
  r.lambda2 = Tv.dot(v);
  const bool u_eigen = (Tu - r.lambda1 * u).norm() <= kAlignTol * scale;
  const bool v_eigen = (Tv - r.lambda2 * v).norm() <= kAlignTol * scale;
  r.condition_i = u_eigen && r.lambda1 < 0.0;
  r.condition_ii = v_eigen && std::abs(r.lambda2 - r.lambda1) > kAlignTol * scale;
  const double l1sq = r.lambda1 * r.lambda1;
  r.condition_iii = std::abs(l1sq - alpha * alpha - r.lambda2 * r.lambda2) <= kAlignTol * std::max(1.0, l1sq);
  const bool spectral = r.condition_i && r.condition_ii && r.condition_iii;

  const Planar k(sys);
  for (int i = 0; i < samples; ++i) {
    const Vec2 x = on_circle(kTwoPi * i / samples);
    r.max_residual = std::max(r.max_residual, (k.power(x, 2) - x).norm());
  }
  const bool sampled = r.max_residual < kTolFixedPoint;
  if (spectral != sampled) {
    throw Error(ErrorCode::InternalInconsistency,
                std::string("spectral involution verdict ") + (spectral ? "true" : "false") +
                    " disagrees with sampled residual " + std::to_string(r.max_residual));
  }
  r.is_involution = spectral;
  return r;
}

std::vector<FixedPointRecord> rotation_fixed_points(double theta, const Vector& a) {
  const double alpha = checked_alpha(a);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double c0 = std::sqrt(1.0 - alpha * alpha);
  if (c < c0 - kTolBoundary) return {};

  const AffineSphereSystem sys(rotation(theta), a);
  const bool tangent = c <= c0 + kTolBoundary;
  const double root = tangent ? 0.0 : std::sqrt(std::max(0.0, alpha * alpha - s * s));
  std::vector<double> ts = tangent ? std::vector<double>{c} : std::vector<double>{c + root, c - root};

  const Complex A(a(0), a(1));
  const Complex r = std::polar(1.0, theta);
  std::vector<FixedPointRecord> out;
  for (double t : ts) {
    const Complex z = A / (t - r);
    Vector x = Eigen::Vector2d(z.real(), z.imag());
    x.normalize();
    FixedPointRecord rec = make_record(sys, x, 1, std::abs(angle_derivative(sys, x, 1)));
    if (tangent) rec.stability = Stability::Neutral;
    out.push_back(std::move(rec));
  }
  return out;
}

bool is_identity_power(const AffineSphereSystem& sys, int period, int samples) {
  require_circle(sys);
  const Planar k(sys);
  for (int i = 0; i < samples; ++i) {
    if (std::abs(k.displacement(kTwoPi * i / samples, period)) >= kIdentityTol) return false;
  }
  return true;
}

std::vector<FixedPointRecord> fixed_points_numeric(const AffineSphereSystem& sys, int period,
                                                   const ScanOptions& opts) {
  require_circle(sys);
  require_certified(sys);
  if (period < 1 || period > 4) throw Error(ErrorCode::InvalidPoint, "period must be in 1..4");
  const Planar k(sys);

  std::vector<double> roots;
  for (int n = opts.n_scan;; n *= 2) {
    double max_abs = 0.0;
    roots = scan_roots(k, period, n, &max_abs);
    if (max_abs < kIdentityTol) return {};
    if (2 * n > opts.max_scan || min_circular_gap(roots) >= 4.0 * kTwoPi / n) break;
  }

  std::vector<FixedPointRecord> out;
  for (double phi : roots) {
    const Vec2 x = on_circle(phi);
    bool duplicate = false;
    for (const auto& r : out) duplicate = duplicate || (r.point - Vector(x)).norm() < kDedupTol;
    if (duplicate) continue;
    const int m = minimal_period(k, x, period);
    FixedPointRecord r;
    r.point = x;
    r.period = m;
    r.residual = (k.power(x, m) - x).norm();
    r.multiplier = std::abs(angle_derivative_numeric(sys, r.point, m));
    r.stability = stability_from_multiplier(r.multiplier);
    out.push_back(std::move(r));
  }
  return out;
}

std::pair<FixedPointRecord, FixedPointRecord> classify_rotation(double theta, const Vector& a) {
  const double alpha = checked_alpha(a);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  if (!(c > std::sqrt(1.0 - alpha * alpha) + kTolBoundary)) {
    throw Error(ErrorCode::NoFixedPoints, "cos(theta) is not above sqrt(1 - alpha^2)");
  }
  const double h = std::sqrt(std::max(0.0, alpha * alpha - s * s)) / alpha;
  const Complex frame = canonical_rotation(a, alpha);
  const AffineSphereSystem sys(rotation(theta), a);

  auto build_record = [&](double second) {
    const Vector canonical = Eigen::Vector2d(-s / alpha, second);
    const Vector x = complex_mul(frame, canonical).normalized();
    const double exact = std::abs(angle_derivative(sys, x, 1));
    const double numeric = std::abs(angle_derivative_numeric(sys, x, 1));
    if (stability_from_multiplier(exact) != stability_from_multiplier(numeric)) {
      throw Error(ErrorCode::InternalInconsistency, "analytic and numeric multipliers disagree on stability");
    }
    return make_record(sys, x, 1, exact);
  };
  return {build_record(h), build_record(-h)};
}

std::vector<FixedPointRecord> neg_identity_analysis(const Vector& a) {
  const double alpha = checked_alpha(a);
  const Complex frame = canonical_rotation(a, alpha);
  const AffineSphereSystem sys(-Matrix::Identity(2, 2), a);
  const double w = std::sqrt(1.0 - alpha * alpha / 4.0);

  struct Expected {
    Eigen::Vector2d canonical;
    Stability stability;
  };
  const Expected expected[] = {{{0.0, 1.0}, Stability::Repelling},
                               {{0.0, -1.0}, Stability::Repelling},
                               {{-w, alpha / 2.0}, Stability::Attracting},
                               {{w, alpha / 2.0}, Stability::Attracting}};

  std::vector<FixedPointRecord> out;
  for (const auto& e : expected) {
    const Vector x = complex_mul(frame, e.canonical).normalized();
    FixedPointRecord r = make_record(sys, x, 2, std::abs(angle_derivative_numeric(sys, x, 2)));
    if (r.stability != e.stability) {
      throw Error(ErrorCode::InternalInconsistency, "period-2 stability differs from the closed form");
    }
    out.push_back(std::move(r));
  }

  const auto numeric = fixed_points_numeric(sys, 2);
  bool consistent = numeric.size() == out.size();
  for (const auto& n : numeric) {
    bool matched = n.period == 2;
    if (matched) {
      matched = std::any_of(out.begin(), out.end(),
                            [&](const FixedPointRecord& r) { return (r.point - n.point).norm() < kDedupTol; });
    }
    consistent = consistent && matched;
  }
  if (!consistent) {
    throw Error(ErrorCode::InternalInconsistency, "numeric period-2 scan disagrees with the closed forms");
  }
  return out;
}

std::optional<FixedPointRecord> eigenvector_period2(const AffineSphereSystem& sys) {
  require_circle(sys);
  require_certified(sys);
  const double alpha = sys.alpha();
  if (!(alpha > 0.0)) return std::nullopt;
  const Vector u = sys.a() / alpha;
  const Vector Tu = sys.T() * u;
  const double lambda1 = Tu.dot(u);
  if ((Tu - lambda1 * u).norm() > kAlignTol * std::max(1.0, sys.T().norm())) return std::nullopt;
  if (!(lambda1 < 0.0) || !(alpha + lambda1 < 0.0)) return std::nullopt;
  return make_record(sys, u, 2, std::abs(angle_derivative_numeric(sys, u, 2)));
}

CircleWitnessResult nondistal_witness_circle(const AffineSphereSystem& sys, int horizon, std::uint64_t seed) {
  require_circle(sys);
  require_certified(sys);
  if (!sys.projective_mode() && involution_check(sys).is_involution) return {std::nullopt, "involution"};

  for (int p = 1; p <= 4; ++p) {
    if (is_identity_power(sys, p)) return {std::nullopt, "finite order"};
    const auto records = fixed_points_numeric(sys, p);

    std::vector<const FixedPointRecord*> candidates;
    for (Stability wanted : {Stability::Attracting, Stability::Repelling}) {
      for (const auto& r : records) {
        if (r.period == p && r.stability == wanted) candidates.push_back(&r);
      }
    }

    for (const FixedPointRecord* anchor : candidates) {
      const double phi = arg(anchor->point);
      double gap = pi;
      for (const auto& other : records) {
        if (&other == anchor) continue;
        gap = std::min(gap, std::abs(wrap(arg(other.point) - phi)));
      }
      const double dphi = std::min(0.02, gap / 4.0);
      const Vector x0 = on_circle(phi + dphi);
      const Vector y0 = on_circle(phi - dphi);
      const double separation = (x0 - y0).norm();
      if (separation < kPairMinSeparation) continue;

      const int direction = anchor->stability == Stability::Attracting ? 1 : -1;
      const long steps = static_cast<long>(p) * horizon;
      Vector x = x0;
      Vector y = y0;
      for (long s = 0; s < steps; ++s) {
        x = step_pair(sys, x, direction);
        y = step_pair(sys, y, direction);
      }
      const double final_distance = (x - y).norm();
      if (!(final_distance < kPairBound)) continue;

      json data{{"x", vector_to_json(x0)},
                {"y", vector_to_json(y0)},
                {"period", p},
                {"horizon", horizon},
                {"steps", steps},
                {"direction", direction},
                {"initial_separation", separation},
                {"min_separation", kPairMinSeparation},
                {"final_distance", final_distance},
                {"bound", kPairBound},
                {"anchor", json{{"point", vector_to_json(anchor->point)},
                                {"period", p},
                                {"residual", (iterate(sys, anchor->point, p) - anchor->point).norm()}}}};
      return {Witness{WitnessKind::NonDistalPair, sys, std::move(data), kTolFixedPoint, seed}, "witness"};
    }
  }
  return {std::nullopt, "unknown"};
}

}  // namespace affsphere
