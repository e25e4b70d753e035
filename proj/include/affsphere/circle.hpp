#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affsphere/io.hpp"
#include "affsphere/sphere_map.hpp"
#include "affsphere/witness.hpp"

namespace affsphere {

/// Fixed-point residual target after refinement.
inline constexpr double kTolFixedPoint = 1e-9;
/// Multipliers within this of 1 are Neutral.
inline constexpr double kTolMultiplier = 1e-6;

enum class Stability { Attracting, Repelling, Neutral, Undetermined };

std::string_view to_string(Stability s);

/// A fixed point (period 1) or periodic point on S^1.
struct FixedPointRecord {
  Vector point;
  int period = 1;
  /// ||f^period(x) - x||.
  double residual = 0.0;
  Stability stability = Stability::Undetermined;
  /// |d/dphi| of the angle map of f^period at the point.
  double multiplier = 0.0;
};

json record_to_json(const FixedPointRecord& r);

Stability stability_from_multiplier(double multiplier);

/// Exact derivative of the angle map of f^period at x via the chain rule.
/// Signed: negative for orientation-reversing maps.
double angle_derivative(const AffineSphereSystem& sys, const Vector& x, int period);

/// Central-difference derivative (step 1e-6) of the angle map of f^period.
double angle_derivative_numeric(const AffineSphereSystem& sys, const Vector& x, int period, double h = 1e-6);

struct InvolutionReport {
  bool is_involution = false;
  /// a is an eigenvector for a real eigenvalue lambda1 < 0.
  bool condition_i = false;
  /// The direction orthogonal to a is an eigenvector for lambda2 != lambda1.
  bool condition_ii = false;
  /// lambda1^2 = ||a||^2 + lambda2^2.
  bool condition_iii = false;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  /// max over samples of ||f^2(x) - x||.
  double max_residual = 0.0;
  int samples = 0;
};

json involution_to_json(const InvolutionReport& r);

/// Spectral involution test cross-checked against `samples` equispaced points.
/// Throws DimensionMismatch unless dim = 2, InvalidAlpha for a = 0,
/// HomeoConditionViolated when uncertified, and InternalInconsistency when
/// the spectral and sampled verdicts disagree.
InvolutionReport involution_check(const AffineSphereSystem& sys, int samples = 1000);

/// Closed-form fixed points of x -> (a + R_theta x) / ||a + R_theta x||.
/// Points are a (t - r)^-1 in complex notation with r = e^{i theta} and
/// t = cos(theta) +- sqrt(alpha^2 - sin^2(theta)); the t+ root comes first.
/// Throws InvalidAlpha unless 0 < ||a|| < 1.
std::vector<FixedPointRecord> rotation_fixed_points(double theta, const Vector& a);

struct ScanOptions {
  int n_scan = 4096;
  int max_scan = 1 << 16;
};

/// Brute-force zeros of the wrapped angle displacement of f^period on a
/// uniform grid, refined by bisection. Records carry their minimal period.
/// Returns an empty list when f^period is the identity (within 1e-10).
/// Throws DimensionMismatch unless dim = 2, InvalidPoint for period outside 1..4.
std::vector<FixedPointRecord> fixed_points_numeric(const AffineSphereSystem& sys, int period,
                                                   const ScanOptions& opts = {});

/// True when f^period moves no grid point by more than 1e-10 in angle.
bool is_identity_power(const AffineSphereSystem& sys, int period, int samples = 4096);

/// (Q attracting, P repelling) for a rotation by theta. Computed in the frame
/// where a = (0, alpha), where Q = (-sin(theta)/alpha, +sqrt(alpha^2 - sin^2(theta))/alpha),
/// then transported back. Throws InvalidAlpha, NoFixedPoints below the existence
/// boundary, InternalInconsistency when the numeric multiplier disagrees.
std::pair<FixedPointRecord, FixedPointRecord> classify_rotation(double theta, const Vector& a);

/// Period-2 structure of x -> (a - x)/||a - x||: +-a/||a|| repelling and
/// x0, a - x0 attracting for f^2. Cross-checked against the numeric scan.
std::vector<FixedPointRecord> neg_identity_analysis(const Vector& a);

/// a/||a|| as a period-2 point when a is an eigenvector of T for a negative
/// eigenvalue lambda1 with ||a|| < |lambda1|.
std::optional<FixedPointRecord> eigenvector_period2(const AffineSphereSystem& sys);

struct CircleWitnessResult {
  std::optional<Witness> witness;
  /// "witness", "involution", "finite order" or "unknown".
  std::string reason;
};

/// Pair of nearby points converging together under f^(k * horizon) near an
/// attracting (forward) or repelling (backward) point of period k <= 4.
CircleWitnessResult nondistal_witness_circle(const AffineSphereSystem& sys, int horizon = 500,
                                             std::uint64_t seed = kDefaultSeed);

}  // namespace affsphere
