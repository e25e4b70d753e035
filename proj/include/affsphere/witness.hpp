#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "affsphere/io.hpp"
#include "affsphere/product.hpp"
#include "affsphere/sphere_map.hpp"

namespace affsphere {

enum class WitnessKind { FixedPoint, PeriodicOrbit, Involution, NonDistalPair, NonExpansivePair, ConvergenceToPoint };

std::string_view to_string(WitnessKind kind);
/// Throws MalformedWitness for unknown names.
WitnessKind witness_kind_from_string(std::string_view name);

using SystemDescription = std::variant<AffineSphereSystem, ProductSphereSystem>;

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Self-contained numerical evidence for a verdict.
///
/// `data` holds the kind-specific payload (points as arrays, claimed values).
/// Pair witnesses may carry a "plane" (two orthonormal columns); replay then
/// projects each step back onto that invariant plane.
struct Witness {
  WitnessKind kind = WitnessKind::FixedPoint;
  SystemDescription system;
  json data;
  double tolerance = 1e-9;
  std::uint64_t seed = kDefaultSeed;
};

/// { "kind", "system", "data", "tolerance", "seed": "<u64>" }
json witness_to_json(const Witness& w);
Witness witness_from_json(const json& j);

json frame_to_json(const Frame2& f);
Frame2 frame_from_json(const json& j);

struct BoundCheck {
  std::string name;
  std::optional<double> claimed;
  double recomputed = 0.0;
  double limit = 0.0;
  bool lower_bound = false;
  bool ok = false;
};

struct VerificationReport {
  bool pass = false;
  std::vector<BoundCheck> recomputed_bounds;
};

/// Replays a witness from scratch. A claimed value must be reproduced within
/// 2 * tolerance and every bound must hold for the recomputed value.
/// Throws MalformedWitness when the payload does not fit the kind.
VerificationReport verify(const Witness& w);

json report_to_json(const VerificationReport& r);

}  // namespace affsphere
