#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affsphere/circle.hpp"
#include "affsphere/composition.hpp"
#include "affsphere/product.hpp"
#include "affsphere/sphere_map.hpp"

namespace affsphere {

struct ClassifyOptions {
  double delta = 0.01;
  int horizon = 500;
  std::uint64_t seed = kDefaultSeed;
};

struct ClassificationReport {
  int dim = 0;
  bool homeo_certified = false;
  double inverse_offset_norm = 0.0;
  /// Circle systems with a nonzero offset only.
  std::optional<InvolutionReport> involution;
  /// Minimal period 1 (circle systems only).
  std::vector<FixedPointRecord> fixed_points;
  /// Minimal period 2 (circle systems only).
  std::vector<FixedPointRecord> period2_points;
  DistalityVerdict distality;
  ExpansivityVerdict expansivity;
  std::vector<std::string> notes;
};

/// Runs every applicable analysis. Uncertified systems get Unknown verdicts.
ClassificationReport classify(const AffineSphereSystem& sys, const ClassifyOptions& opts = {});

json report_to_json(const ClassificationReport& r);

/// Non-distality evidence for any dimension: the circle search on S^1, or on
/// the invariant circle through the offset, or convergence to a/||a|| when
/// a is the dominant eigenvector.
DistalityVerdict distality_verdict(const AffineSphereSystem& sys, const ClassifyOptions& opts = {});

ExpansivityVerdict expansivity_verdict(const AffineSphereSystem& sys, const ClassifyOptions& opts = {});

struct ProductReport {
  std::vector<ClassificationReport> factors;
  bool homeo_certified = false;
  DistalityVerdict distality;
  ExpansivityVerdict expansivity;
};

ProductReport classify_product(const ProductSphereSystem& p, const ClassifyOptions& opts = {});

/// A one-factor product serializes exactly as the factor's own report.
json report_to_json(const ProductReport& r);

}  // namespace affsphere
