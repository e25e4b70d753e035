#include "affsphere/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "affsphere/error.hpp"

namespace affsphere {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedWitness, what); }

const json& field(const json& data, const char* key) {
  if (!data.is_object() || !data.contains(key)) malformed(std::string("witness data lacks \"") + key + "\"");
  return data.at(key);
}

double number(const json& data, const char* key) {
  const json& v = field(data, key);
  if (!v.is_number()) malformed(std::string("\"") + key + "\" must be numeric");
  return v.get<double>();
}

long integer(const json& data, const char* key) {
  const json& v = field(data, key);
  if (!v.is_number_integer()) malformed(std::string("\"") + key + "\" must be an integer");
  return v.get<long>();
}

Vector point(const json& data, const char* key, int dim) {
  Vector v;
  try {
    v = vector_from_json(field(data, key));
  } catch (const Error& e) {
    malformed(std::string("\"") + key + "\": " + e.what());
  }
  if (v.size() != dim) malformed(std::string("\"") + key + "\" has the wrong dimension");
  return v;
}

ProductPoint product_point(const json& data, const char* key, const ProductSphereSystem& p) {
  ProductPoint v;
  try {
    v = product_point_from_json(field(data, key));
  } catch (const Error& e) {
    malformed(std::string("\"") + key + "\": " + e.what());
  }
  if (v.size() != p.size()) malformed(std::string("\"") + key + "\" has the wrong number of components");
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].size() != p.factors()[k].dim()) malformed(std::string("\"") + key + "\" component has the wrong length");
  }
  return v;
}

/// Claimed value reproduced within `slack` and recomputed <= limit.
BoundCheck upper(std::string name, std::optional<double> claimed, double recomputed, double limit, double slack) {
  BoundCheck b{std::move(name), claimed, recomputed, limit, false, false};
  const bool reproduced = !claimed || std::abs(*claimed - recomputed) <= slack;
  b.ok = reproduced && std::isfinite(recomputed) && recomputed <= limit;
  return b;
}

BoundCheck lower(std::string name, std::optional<double> claimed, double recomputed, double limit, double slack) {
  BoundCheck b{std::move(name), claimed, recomputed, limit, true, false};
  const bool reproduced = !claimed || std::abs(*claimed - recomputed) <= slack;
  b.ok = reproduced && std::isfinite(recomputed) && recomputed >= limit;
  return b;
}

/// Orbit stepping on a single sphere, optionally projected onto an invariant plane.
class Stepper {
 public:
  Stepper(const AffineSphereSystem& sys, std::optional<Frame2> plane) : sys_(sys), plane_(std::move(plane)) {}

  Vector step(const Vector& x, int direction) {
    Vector y = direction >= 0 ? apply(sys_, x) : apply_inverse(sys_, x);
    if (!plane_) return y;
    const Vector proj = *plane_ * (plane_->transpose() * y);
    off_plane_ = std::max(off_plane_, (y - proj).norm());
    return proj.normalized();
  }

  double off_plane() const { return off_plane_; }
  bool projected() const { return plane_.has_value(); }

 private:
  const AffineSphereSystem& sys_;
  std::optional<Frame2> plane_;
  double off_plane_ = 0.0;
};

std::optional<Frame2> optional_plane(const json& data, int dim) {
  if (!data.contains("plane")) return std::nullopt;
  Frame2 f = frame_from_json(data.at("plane"));
  if (f.rows() != dim) malformed("\"plane\" has the wrong dimension");
  return f;
}

const AffineSphereSystem& single(const Witness& w) {
  const auto* sys = std::get_if<AffineSphereSystem>(&w.system);
  if (sys == nullptr) malformed(std::string(to_string(w.kind)) + " witnesses need a single system");
  return *sys;
}

constexpr double kPlaneResidual = 1e-8;
constexpr double kLowerPeriodGap = 1e-6;

void verify_fixed_point(const Witness& w, VerificationReport& r) {
  const auto& sys = single(w);
  const Vector x = point(w.data, "point", sys.dim());
  const long period = w.kind == WitnessKind::FixedPoint ? 1 : integer(w.data, "period");
  if (period < 1) malformed("\"period\" must be positive");
  const double claimed = number(w.data, "residual");
  const double slack = 2.0 * w.tolerance;
  r.recomputed_bounds.push_back(lower("unit_norm_gap", std::nullopt, -std::abs(x.norm() - 1.0), -1e-8, 0.0));
  if (!r.recomputed_bounds.back().ok) return;
  Vector y = x;
  std::vector<Vector> iterates;
  for (long k = 0; k < period; ++k) {
    y = apply(sys, y);
    iterates.push_back(y);
  }
  r.recomputed_bounds.push_back(upper("residual", claimed, (y - x).norm(), slack, slack));
  for (long d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    r.recomputed_bounds.push_back(lower("displacement_at_" + std::to_string(d), std::nullopt,
                                        (iterates[static_cast<std::size_t>(d - 1)] - x).norm(), kLowerPeriodGap, 0.0));
  }
}

void verify_involution(const Witness& w, VerificationReport& r) {
  const auto& sys = single(w);
  if (sys.dim() != 2) malformed("involution witnesses live on the circle");
  const long samples = integer(w.data, "samples");
  if (samples < 1) malformed("\"samples\" must be positive");
  const double claimed = number(w.data, "max_residual");
  std::mt19937_64 rng(w.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  for (long i = 0; i < samples; ++i) {
    const double phi = angle(rng);
    const Vector x = Eigen::Vector2d(std::cos(phi), std::sin(phi));
    worst = std::max(worst, (apply(sys, apply(sys, x)) - x).norm());
  }
  const double slack = 2.0 * w.tolerance;
  r.recomputed_bounds.push_back(upper("max_residual", claimed, worst, slack, slack));
}

void verify_pair_single(const Witness& w, VerificationReport& r) {
  const auto& sys = single(w);
  const int dim = sys.dim();
  Vector x = point(w.data, "x", dim);
  Vector y = point(w.data, "y", dim);
  Stepper stepper(sys, optional_plane(w.data, dim));
  const double slack = 2.0 * w.tolerance;
  const double sep = (x - y).norm();
  r.recomputed_bounds.push_back(
      lower("initial_separation", number(w.data, "initial_separation"), sep, number(w.data, "min_separation"), slack));

  if (w.kind == WitnessKind::NonDistalPair) {
    const long steps = integer(w.data, "steps");
    const int direction = integer(w.data, "direction") < 0 ? -1 : 1;
    for (long k = 0; k < steps; ++k) {
      x = stepper.step(x, direction);
      y = stepper.step(y, direction);
    }
    r.recomputed_bounds.push_back(
        upper("final_distance", number(w.data, "final_distance"), (x - y).norm(), number(w.data, "bound"), slack));
    if (w.data.contains("anchor")) {
      const json& anchor = w.data.at("anchor");
      const Vector p = point(anchor, "point", dim);
      const long period = integer(anchor, "period");
      Stepper anchor_stepper(sys, optional_plane(w.data, dim));
      Vector q = p;
      for (long k = 0; k < period; ++k) q = anchor_stepper.step(q, 1);
      r.recomputed_bounds.push_back(upper("anchor_residual", number(anchor, "residual"), (q - p).norm(), slack, slack));
    }
  } else {
    const long horizon = integer(w.data, "horizon");
    const double delta = number(w.data, "delta");
    double sup = sep;
    for (int direction : {1, -1}) {
      Vector u = point(w.data, "x", dim);
      Vector v = point(w.data, "y", dim);
      for (long k = 0; k < horizon; ++k) {
        u = stepper.step(u, direction);
        v = stepper.step(v, direction);
        sup = std::max(sup, (u - v).norm());
      }
    }
    r.recomputed_bounds.push_back(upper("sup_distance", number(w.data, "sup_distance"), sup,
                                        std::nextafter(delta, 0.0), slack));
  }
  if (stepper.projected()) {
    r.recomputed_bounds.push_back(upper("off_plane_residual", std::nullopt, stepper.off_plane(), kPlaneResidual, 0.0));
  }
}

void verify_convergence(const Witness& w, VerificationReport& r) {
  const auto& sys = single(w);
  const int dim = sys.dim();
  Vector x = point(w.data, "x", dim);
  const Vector target = point(w.data, "target", dim);
  const long iterations = integer(w.data, "iterations");
  const double slack = 2.0 * w.tolerance;
  r.recomputed_bounds.push_back(lower("initial_separation", std::nullopt, (x - target).norm(), 1e-3, 0.0));
  r.recomputed_bounds.push_back(
      upper("target_residual", number(w.data, "target_residual"), (apply(sys, target) - target).norm(), slack, slack));
  for (long k = 0; k < iterations; ++k) x = apply(sys, x);
  r.recomputed_bounds.push_back(
      upper("final_distance", number(w.data, "final_distance"), (x - target).norm(), number(w.data, "bound"), slack));
}

void verify_product(const Witness& w, const ProductSphereSystem& p, VerificationReport& r) {
  const double slack = 2.0 * w.tolerance;
  std::optional<Frame2> plane;
  std::size_t coordinate = 0;
  if (w.data.contains("plane")) {
    const long c = integer(w.data, "coordinate");
    if (c < 0 || static_cast<std::size_t>(c) >= p.size()) malformed("\"coordinate\" out of range");
    coordinate = static_cast<std::size_t>(c);
    plane = optional_plane(w.data, p.factors()[coordinate].dim());
  }
  double off_plane = 0.0;
  auto step = [&](const ProductPoint& v, int direction) {
    ProductPoint out = direction >= 0 ? product_apply(p, v) : product_apply_inverse(p, v);
    if (plane) {
      Vector& c = out[coordinate];
      const Vector proj = *plane * (plane->transpose() * c);
      off_plane = std::max(off_plane, (c - proj).norm());
      c = proj.normalized();
    }
    return out;
  };

  switch (w.kind) {
    case WitnessKind::NonDistalPair:
    case WitnessKind::NonExpansivePair: {
      ProductPoint x = product_point(w.data, "x", p);
      ProductPoint y = product_point(w.data, "y", p);
      const double sep = product_distance(x, y);
      r.recomputed_bounds.push_back(lower("initial_separation", number(w.data, "initial_separation"), sep,
                                          number(w.data, "min_separation"), slack));
      if (w.kind == WitnessKind::NonDistalPair) {
        const long steps = integer(w.data, "steps");
        const int direction = integer(w.data, "direction") < 0 ? -1 : 1;
        for (long k = 0; k < steps; ++k) {
          x = step(x, direction);
          y = step(y, direction);
        }
        r.recomputed_bounds.push_back(upper("final_distance", number(w.data, "final_distance"), product_distance(x, y),
                                            number(w.data, "bound"), slack));
      } else {
        const long horizon = integer(w.data, "horizon");
        const double delta = number(w.data, "delta");
        double sup = sep;
        for (int direction : {1, -1}) {
          ProductPoint u = product_point(w.data, "x", p);
          ProductPoint v = product_point(w.data, "y", p);
          for (long k = 0; k < horizon; ++k) {
            u = step(u, direction);
            v = step(v, direction);
            sup = std::max(sup, product_distance(u, v));
          }
        }
        r.recomputed_bounds.push_back(upper("sup_distance", number(w.data, "sup_distance"), sup,
                                            std::nextafter(delta, 0.0), slack));
      }
      break;
    }
    case WitnessKind::ConvergenceToPoint: {
      ProductPoint x = product_point(w.data, "x", p);
      const ProductPoint target = product_point(w.data, "target", p);
      const long iterations = integer(w.data, "iterations");
      r.recomputed_bounds.push_back(lower("initial_separation", std::nullopt, product_distance(x, target), 1e-3, 0.0));
      for (long k = 0; k < iterations; ++k) x = step(x, 1);
      r.recomputed_bounds.push_back(upper("final_distance", number(w.data, "final_distance"),
                                          product_distance(x, target), number(w.data, "bound"), slack));
      break;
    }
    default:
      malformed(std::string(to_string(w.kind)) + " witnesses need a single system");
  }
  if (plane) r.recomputed_bounds.push_back(upper("off_plane_residual", std::nullopt, off_plane, kPlaneResidual, 0.0));
}

}  // namespace

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::FixedPoint:
      return "FixedPoint";
    case WitnessKind::PeriodicOrbit:
      return "PeriodicOrbit";
    case WitnessKind::Involution:
      return "Involution";
    case WitnessKind::NonDistalPair:
      return "NonDistalPair";
    case WitnessKind::NonExpansivePair:
      return "NonExpansivePair";
    case WitnessKind::ConvergenceToPoint:
      return "ConvergenceToPoint";
  }
  return "Unknown";
}

WitnessKind witness_kind_from_string(std::string_view name) {
  for (auto k : {WitnessKind::FixedPoint, WitnessKind::PeriodicOrbit, WitnessKind::Involution,
                 WitnessKind::NonDistalPair, WitnessKind::NonExpansivePair, WitnessKind::ConvergenceToPoint}) {
    if (to_string(k) == name) return k;
  }
  malformed("unknown witness kind \"" + std::string(name) + "\"");
}

json frame_to_json(const Frame2& f) {
  return json::array({vector_to_json(f.col(0)), vector_to_json(f.col(1))});
}

Frame2 frame_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) malformed("\"plane\" must hold two column vectors");
  Vector c0;
  Vector c1;
  try {
    c0 = vector_from_json(j[0]);
    c1 = vector_from_json(j[1]);
  } catch (const Error& e) {
    malformed(std::string("\"plane\": ") + e.what());
  }
  if (c0.size() != c1.size() || c0.size() < 2) malformed("\"plane\" columns disagree in length");
  Frame2 f(c0.size(), 2);
  f.col(0) = c0;
  f.col(1) = c1;
  if (((f.transpose() * f) - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() > 1e-9) {
    malformed("\"plane\" columns are not orthonormal");
  }
  return f;
}

json witness_to_json(const Witness& w) {
  json system = std::visit(
      [](const auto& s) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, AffineSphereSystem>) {
          return system_to_json(s);
        } else {
          return product_to_json(s);
        }
      },
      w.system);
  return json{{"kind", std::string(to_string(w.kind))},
              {"system", std::move(system)},
              {"data", w.data},
              {"tolerance", w.tolerance},
              {"seed", std::to_string(w.seed)}};
}

Witness witness_from_json(const json& j) {
  if (!j.is_object()) malformed("witness must be a JSON object");
  for (const char* key : {"kind", "system", "data", "tolerance", "seed"}) {
    if (!j.contains(key)) malformed(std::string("witness lacks \"") + key + "\"");
  }
  if (!j["kind"].is_string()) malformed("\"kind\" must be a string");
  if (!j["tolerance"].is_number()) malformed("\"tolerance\" must be numeric");
  if (!j["data"].is_object()) malformed("\"data\" must be an object");

  const WitnessKind kind = witness_kind_from_string(j["kind"].get<std::string>());
  const double tolerance = j["tolerance"].get<double>();
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) malformed("\"tolerance\" must be positive");
  std::uint64_t seed_value = 0;

  const json& seed = j["seed"];
  if (seed.is_string()) {
    const std::string s = seed.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) malformed("\"seed\" must be a u64");
    try {
      seed_value = std::stoull(s);
    } catch (const std::exception&) {
      malformed("\"seed\" out of range");
    }
  } else if (seed.is_number_unsigned()) {
    seed_value = seed.get<std::uint64_t>();
  } else {
    malformed("\"seed\" must be a u64 string");
  }

  try {
    if (j["system"].is_object() && j["system"].contains("factors")) {
      return Witness{kind, product_from_json(j["system"]), j["data"], tolerance, seed_value};
    }
    return Witness{kind, system_from_json(j["system"]), j["data"], tolerance, seed_value};
  } catch (const Error& e) {
    malformed(std::string("\"system\": ") + e.what());
  }
}

VerificationReport verify(const Witness& w) {
  VerificationReport r;
  try {
    if (const auto* p = std::get_if<ProductSphereSystem>(&w.system)) {
      verify_product(w, *p, r);
    } else {
      switch (w.kind) {
        case WitnessKind::FixedPoint:
        case WitnessKind::PeriodicOrbit:
          verify_fixed_point(w, r);
          break;
        case WitnessKind::Involution:
          verify_involution(w, r);
          break;
        case WitnessKind::NonDistalPair:
        case WitnessKind::NonExpansivePair:
          verify_pair_single(w, r);
          break;
        case WitnessKind::ConvergenceToPoint:
          verify_convergence(w, r);
          break;
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedWitness) throw;
    // Replay hit a numerical failure (degenerate image, non-invertible step): the witness does not hold.
    r.recomputed_bounds.push_back(BoundCheck{"replay: " + std::string(e.what()), std::nullopt,
                                             std::numeric_limits<double>::quiet_NaN(), 0.0, false, false});
  }
  r.pass = !r.recomputed_bounds.empty() &&
           std::all_of(r.recomputed_bounds.begin(), r.recomputed_bounds.end(), [](const BoundCheck& b) { return b.ok; });
  return r;
}

json report_to_json(const VerificationReport& r) {
  json bounds = json::array();
  for (const auto& b : r.recomputed_bounds) {
    json e{{"name", b.name},
           {"recomputed", std::isfinite(b.recomputed) ? json(b.recomputed) : json(nullptr)},
           {"limit", b.limit},
           {"kind", b.lower_bound ? "lower" : "upper"},
           {"ok", b.ok}};
    if (b.claimed) e["claimed"] = *b.claimed;
    bounds.push_back(std::move(e));
  }
  return json{{"pass", r.pass}, {"recomputed_bounds", std::move(bounds)}};
}

}  // namespace affsphere
