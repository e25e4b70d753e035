#pragma once

#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "affsphere/circle.hpp"

namespace affsphere {

/// Parses "0.5", "pi", "-pi/4", "2*pi/3", "3pi/4" to radians.
/// Throws MalformedInput on anything else.
double parse_angle(std::string_view text);

/// Inclusive uniform grid start:stop:step.
struct AxisSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  /// Throws MalformedInput unless text is start:stop:step with step > 0 and
  /// stop >= start; a single value gives a one-point axis.
  static AxisSpec parse(std::string_view text);
  std::vector<double> values() const;
};

struct SweepCell {
  double theta = 0.0;
  double alpha = 0.0;
  int fixed_count = 0;
  /// Minimal period 2 only; -1 when the period-2 scan was skipped.
  int period2_count = 0;
  std::optional<Vector> attracting_Q;
  /// |cos(theta) - sqrt(1 - alpha^2)| < 1e-3.
  bool boundary = false;
};

struct SweepOptions {
  bool period2 = true;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  ScanOptions scan;
};

/// Cells stored theta-major: cells[i * alphas.size() + j] is (thetas[i], alphas[j]).
struct SweepGrid {
  std::vector<double> thetas;
  std::vector<double> alphas;
  std::vector<SweepCell> cells;

  const SweepCell& at(std::size_t i, std::size_t j) const { return cells.at(i * alphas.size() + j); }
};

inline constexpr double kBoundaryBand = 1e-3;

/// Evaluates x -> (a + R_theta x)/||a + R_theta x|| with a = (0, alpha) for every
/// grid cell. Throws InvalidAlpha unless every alpha lies in (0, 1).
SweepGrid run_sweep(const std::vector<double>& thetas, const std::vector<double>& alphas,
                    const SweepOptions& opts = {});
SweepGrid run_sweep(const AxisSpec& theta, const AxisSpec& alpha, const SweepOptions& opts = {});

SweepCell sweep_cell(double theta, double alpha, const SweepOptions& opts = {});

/// Header theta,alpha,fixed_count,period2_count,boundary; %.17g numbers.
void write_csv(const SweepGrid& grid, std::ostream& out);

/// Heat map of fixed_count with the curve cos(theta) = sqrt(1 - alpha^2).
void write_svg(const SweepGrid& grid, std::ostream& out);

}  // namespace affsphere
