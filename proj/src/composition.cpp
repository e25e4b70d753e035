#include "affsphere/composition.hpp"

#include "affsphere/circle.hpp"
#include "affsphere/error.hpp"

namespace affsphere {

namespace {

ProductPoint base_points(const ProductSphereSystem& p) {
  ProductPoint out;
  for (const auto& f : p.factors()) out.push_back(lift_base_point(f));
  return out;
}

ProductPoint with_component(ProductPoint base, std::size_t k, const Vector& v) {
  base[k] = v;
  return base;
}

Vector factor_vector(const json& data, const char* key, int dim) {
  if (!data.contains(key)) throw Error(ErrorCode::MalformedWitness, std::string("witness data lacks \"") + key + "\"");
  Vector v = vector_from_json(data.at(key));
  if (v.size() != dim) throw Error(ErrorCode::MalformedWitness, std::string("\"") + key + "\" has the wrong dimension");
  return v;
}

}  // namespace

std::string_view to_string(DistalityKind k) {
  switch (k) {
    case DistalityKind::NonDistal:
      return "NonDistal";
    case DistalityKind::Distal:
      return "Distal";
    case DistalityKind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(ExpansivityKind k) { return k == ExpansivityKind::NonExpansive ? "NonExpansive" : "Unknown"; }

json verdict_to_json(const DistalityVerdict& v) {
  json out{{"verdict", std::string(to_string(v.kind))}, {"reason", v.reason}};
  if (v.witness) out["witness"] = witness_to_json(*v.witness);
  return out;
}

json verdict_to_json(const ExpansivityVerdict& v) {
  json out{{"verdict", std::string(to_string(v.kind))}, {"reason", v.reason}};
  if (v.witness) out["witness"] = witness_to_json(*v.witness);
  return out;
}

Vector lift_base_point(const AffineSphereSystem& factor) {
  if (factor.dim() == 2 && factor.homeo_certified()) {
    try {
      const auto records = fixed_points_numeric(factor, 1);
      if (!records.empty()) return records.front().point;
    } catch (const Error&) {
      // fall through to the coordinate axis
    }
  }
  return Vector::Unit(factor.dim(), 0);
}

Witness lift_witness(const ProductSphereSystem& p, std::size_t k, const Witness& factor_witness) {
  if (k >= p.size()) throw Error(ErrorCode::DimensionMismatch, "lift coordinate out of range");
  if (!std::holds_alternative<AffineSphereSystem>(factor_witness.system)) {
    throw Error(ErrorCode::MalformedWitness, "only single-system witnesses can be lifted");
  }
  const int dim = p.factors()[k].dim();
  const json& d = factor_witness.data;
  const ProductPoint base = base_points(p);

  json data;
  WitnessKind kind = factor_witness.kind;
  switch (factor_witness.kind) {
    case WitnessKind::NonDistalPair:
    case WitnessKind::NonExpansivePair: {
      data = d;
      data.erase("anchor");
      data["x"] = product_point_to_json(with_component(base, k, factor_vector(d, "x", dim)));
      data["y"] = product_point_to_json(with_component(base, k, factor_vector(d, "y", dim)));
      break;
    }
    case WitnessKind::ConvergenceToPoint: {
      kind = WitnessKind::NonDistalPair;
      const Vector x = factor_vector(d, "x", dim);
      const Vector target = factor_vector(d, "target", dim);
      data = json{{"x", product_point_to_json(with_component(base, k, x))},
                  {"y", product_point_to_json(with_component(base, k, target))},
                  {"steps", d.at("iterations")},
                  {"direction", 1},
                  {"initial_separation", (x - target).norm()},
                  {"min_separation", 1e-3},
                  {"final_distance", d.at("final_distance")},
                  {"bound", d.at("bound")}};
      break;
    }
    default:
      throw Error(ErrorCode::MalformedWitness,
                  std::string(to_string(factor_witness.kind)) + " witnesses carry no pair to lift");
  }
  data["coordinate"] = k;
  return Witness{kind, p, std::move(data), factor_witness.tolerance, factor_witness.seed};
}

DistalityVerdict product_distality_verdict(const ProductSphereSystem& p, const std::vector<DistalityVerdict>& factors) {
  if (factors.size() != p.size()) throw Error(ErrorCode::DimensionMismatch, "one verdict per factor required");
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& v = factors[k];
    if (v.kind == DistalityKind::NonDistal && v.witness) {
      return {DistalityKind::NonDistal, lift_witness(p, k, *v.witness),
              "factor " + std::to_string(k) + " is not distal"};
    }
  }
  const bool all_distal = std::all_of(factors.begin(), factors.end(),
                                      [](const DistalityVerdict& v) { return v.kind == DistalityKind::Distal; });
  if (all_distal) return {DistalityKind::Distal, std::nullopt, "every factor is distal"};
  return {DistalityKind::Unknown, std::nullopt, "no factor witness and not every factor is distal"};
}

ExpansivityVerdict product_expansivity_verdict(const ProductSphereSystem& p,
                                               const std::vector<ExpansivityVerdict>& factors) {
  if (factors.size() != p.size()) throw Error(ErrorCode::DimensionMismatch, "one verdict per factor required");
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& v = factors[k];
    if (v.kind == ExpansivityKind::NonExpansive && v.witness) {
      return {ExpansivityKind::NonExpansive, lift_witness(p, k, *v.witness),
              "factor " + std::to_string(k) + " is not expansive"};
    }
  }
  return {ExpansivityKind::Unknown, std::nullopt, "no factor witness against expansivity"};
}

}  // namespace affsphere
