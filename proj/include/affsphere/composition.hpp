#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affsphere/product.hpp"
#include "affsphere/witness.hpp"

namespace affsphere {

enum class DistalityKind { NonDistal, Distal, Unknown };
enum class ExpansivityKind { NonExpansive, Unknown };

std::string_view to_string(DistalityKind k);
std::string_view to_string(ExpansivityKind k);

struct DistalityVerdict {
  DistalityKind kind = DistalityKind::Unknown;
  std::optional<Witness> witness;
  std::string reason;
};

/// Expansivity is never affirmed; the only positive outcome is a witness against it.
struct ExpansivityVerdict {
  ExpansivityKind kind = ExpansivityKind::Unknown;
  std::optional<Witness> witness;
  std::string reason;
};

json verdict_to_json(const DistalityVerdict& v);
json verdict_to_json(const ExpansivityVerdict& v);

/// Point held fixed in the non-witness coordinates: a numeric fixed point on
/// S^1 when one exists, else e_1.
Vector lift_base_point(const AffineSphereSystem& factor);

/// Embeds a factor pair witness into coordinate k of the product; the other
/// coordinates start at lift_base_point in both points. ConvergenceToPoint
/// becomes a NonDistalPair of (x, target). Throws MalformedWitness for kinds
/// that carry no pair, DimensionMismatch for a bad coordinate.
Witness lift_witness(const ProductSphereSystem& p, std::size_t k, const Witness& factor_witness);

/// Any NonDistal factor makes the product NonDistal (lifted witness); all
/// Distal gives Distal; anything else is Unknown.
DistalityVerdict product_distality_verdict(const ProductSphereSystem& p, const std::vector<DistalityVerdict>& factors);

/// Any NonExpansive factor makes the product NonExpansive; otherwise Unknown.
ExpansivityVerdict product_expansivity_verdict(const ProductSphereSystem& p,
                                               const std::vector<ExpansivityVerdict>& factors);

}  // namespace affsphere
