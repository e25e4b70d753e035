#include "affsphere/classify.hpp"

#include <cmath>

#include "affsphere/error.hpp"
#include "affsphere/sphere_n.hpp"

namespace affsphere {

namespace {

constexpr double kConvergenceBound = 1e-6;
constexpr long kConvergenceCap = 100000;

/// Overwrites claimed values with an ambient replay, then re-verifies.
bool refresh_claims(Witness& w) {
  const VerificationReport first = verify(w);
  for (const auto& b : first.recomputed_bounds) {
    if (!std::isfinite(b.recomputed)) return false;
    if (b.name == "anchor_residual") {
      w.data["anchor"]["residual"] = b.recomputed;
    } else if (w.data.contains(b.name)) {
      w.data[b.name] = b.recomputed;
    }
  }
  return verify(w).pass;
}

json embed(const Frame2& W, const json& planar) { return vector_to_json(W * vector_from_json(planar)); }

std::optional<Witness> plane_nondistal(const AffineSphereSystem& sys, const Frame2& W, const ClassifyOptions& opts,
                                       std::string& reason) {
  const AffineSphereSystem restricted(W.transpose() * sys.T() * W, W.transpose() * sys.a());
  if (!restricted.homeo_certified()) return std::nullopt;
  CircleWitnessResult r = nondistal_witness_circle(restricted, opts.horizon, opts.seed);
  reason = r.reason;
  if (!r.witness) return std::nullopt;
  json data = r.witness->data;
  data["x"] = embed(W, data["x"]);
  data["y"] = embed(W, data["y"]);
  data["anchor"]["point"] = embed(W, data["anchor"]["point"]);
  data["plane"] = frame_to_json(W);
  Witness w{WitnessKind::NonDistalPair, sys, std::move(data), r.witness->tolerance, opts.seed};
  if (!refresh_claims(w)) return std::nullopt;
  return w;
}

/// a = c v with T v = lambda v, lambda > 0 dominant and simple: points of the
/// complementary invariant subspace converge to v.
std::optional<Witness> eigen_offset_convergence(const AffineSphereSystem& sys, const ClassifyOptions& opts) {
  const double alpha = sys.alpha();
  if (!(alpha > 0.0)) return std::nullopt;
  const Vector v = sys.a() / alpha;
  const Vector Tv = sys.T() * v;
  const double lambda = Tv.dot(v);
  if (!(lambda > 0.0) || (Tv - lambda * v).norm() > 1e-9 * std::max(1.0, sys.T().norm())) return std::nullopt;

  const auto clusters = eigen_clusters(sys.T());
  std::size_t dominant = clusters.size();
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].is_real() && std::abs(clusters[i].value.real() - lambda) <= 1e-6 * lambda) dominant = i;
  }
  if (dominant == clusters.size() || clusters[dominant].multiplicity != 1) return std::nullopt;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (i != dominant && clusters[i].modulus() >= lambda * (1.0 - 1e-9)) return std::nullopt;
  }
  std::vector<Matrix> parts;
  Eigen::Index cols = 0;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (i == dominant || clusters[i].value.imag() < 0.0) continue;
    parts.push_back(generalized_eigenspace(sys.T(), clusters[i]));
    cols += parts.back().cols();
  }
  if (cols == 0) return std::nullopt;
  const Vector x0 = parts.front().col(0).normalized();

  Vector x = x0;
  long m = 0;
  double dist = (x - v).norm();
  while (dist >= kConvergenceBound && m < kConvergenceCap) {
    x = apply(sys, x);
    dist = (x - v).norm();
    ++m;
  }
  if (dist >= kConvergenceBound || (x0 - v).norm() < 1e-3) return std::nullopt;
  json data{{"x", vector_to_json(x0)},
            {"target", vector_to_json(v)},
            {"iterations", m},
            {"final_distance", dist},
            {"bound", kConvergenceBound},
            {"target_residual", (apply(sys, v) - v).norm()}};
  Witness w{WitnessKind::ConvergenceToPoint, sys, std::move(data), kTolFixedPoint, opts.seed};
  if (!verify(w).pass) return std::nullopt;
  return w;
}

}  // namespace

DistalityVerdict distality_verdict(const AffineSphereSystem& sys, const ClassifyOptions& opts) {
  if (!sys.homeo_certified()) return {DistalityKind::Unknown, std::nullopt, "homeomorphism condition not certified"};
  if (sys.dim() == 2) {
    CircleWitnessResult r = nondistal_witness_circle(sys, opts.horizon, opts.seed);
    if (r.witness) return {DistalityKind::NonDistal, std::move(r.witness), "orbits of a nearby pair converge"};
    if (r.reason == "involution") return {DistalityKind::Distal, std::nullopt, "involution"};
    if (r.reason == "finite order") return {DistalityKind::Distal, std::nullopt, "finite order"};
    return {DistalityKind::Unknown, std::nullopt, "no periodic point of period <= 4 found"};
  }
  std::string plane_reason = "offset lies in no invariant 2-plane";
  if (const auto W = plane_containing_offset(sys)) {
    if (auto w = plane_nondistal(sys, *W, opts, plane_reason)) {
      return {DistalityKind::NonDistal, std::move(w), "orbits of a nearby pair on an invariant circle converge"};
    }
  }
  if (auto w = eigen_offset_convergence(sys, opts)) {
    return {DistalityKind::NonDistal, std::move(w), "points of the complementary subspace converge to a/||a||"};
  }
  return {DistalityKind::Unknown, std::nullopt, "no witness found (invariant circle: " + plane_reason + ")"};
}

ExpansivityVerdict expansivity_verdict(const AffineSphereSystem& sys, const ClassifyOptions& opts) {
  if (!sys.homeo_certified()) return {ExpansivityKind::Unknown, std::nullopt, "homeomorphism condition not certified"};
  try {
    return {ExpansivityKind::NonExpansive, nonexpansive_witness(sys, opts.delta, opts.horizon, opts.seed),
            "a pair on an invariant circle stays delta-close"};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::WitnessNotFound) throw;
    return {ExpansivityKind::Unknown, std::nullopt, e.what()};
  }
}

ClassificationReport classify(const AffineSphereSystem& sys, const ClassifyOptions& opts) {
  ClassificationReport r;
  r.dim = sys.dim();
  r.homeo_certified = sys.homeo_certified();
  r.inverse_offset_norm = sys.inverse_offset_norm();
  if (!r.homeo_certified) {
    r.notes.push_back("||T^-1 a|| >= 1: the map is not certified as a homeomorphism; analyses skipped");
    r.distality = {DistalityKind::Unknown, std::nullopt, "homeomorphism condition not certified"};
    r.expansivity = {ExpansivityKind::Unknown, std::nullopt, "homeomorphism condition not certified"};
    return r;
  }
  if (sys.dim() == 2) {
    if (!sys.projective_mode()) r.involution = involution_check(sys);
    if (is_identity_power(sys, 1)) {
      r.notes.push_back("the map is the identity; every point is fixed");
    } else {
      r.fixed_points = fixed_points_numeric(sys, 1);
      if (is_identity_power(sys, 2)) {
        r.notes.push_back("the second iterate is the identity; every point has period <= 2");
      } else {
        for (auto& p : fixed_points_numeric(sys, 2)) {
          if (p.period == 2) r.period2_points.push_back(std::move(p));
        }
      }
    }
  } else {
    r.notes.push_back("fixed and periodic points are enumerated on S^1 only");
  }
  r.distality = distality_verdict(sys, opts);
  r.expansivity = expansivity_verdict(sys, opts);
  return r;
}

json report_to_json(const ClassificationReport& r) {
  json fixed = json::array();
  for (const auto& p : r.fixed_points) fixed.push_back(record_to_json(p));
  json period2 = json::array();
  for (const auto& p : r.period2_points) period2.push_back(record_to_json(p));
  json out{{"dim", r.dim},
           {"homeo_certified", r.homeo_certified},
           {"inverse_offset_norm", r.inverse_offset_norm},
           {"fixed_points", fixed},
           {"period2_points", period2},
           {"distality", verdict_to_json(r.distality)},
           {"expansivity", verdict_to_json(r.expansivity)},
           {"notes", r.notes}};
  out["involution"] = r.involution ? involution_to_json(*r.involution) : json(nullptr);
  return out;
}

ProductReport classify_product(const ProductSphereSystem& p, const ClassifyOptions& opts) {
  ProductReport r;
  r.homeo_certified = p.homeo_certified();
  std::vector<DistalityVerdict> distality;
  std::vector<ExpansivityVerdict> expansivity;
  for (const auto& f : p.factors()) {
    r.factors.push_back(classify(f, opts));
    distality.push_back(r.factors.back().distality);
    expansivity.push_back(r.factors.back().expansivity);
  }
  r.distality = product_distality_verdict(p, distality);
  r.expansivity = product_expansivity_verdict(p, expansivity);
  return r;
}

json report_to_json(const ProductReport& r) {
  if (r.factors.size() == 1) return report_to_json(r.factors.front());
  json factors = json::array();
  for (const auto& f : r.factors) factors.push_back(report_to_json(f));
  return json{{"homeo_certified", r.homeo_certified},
              {"factors", factors},
              {"distality", verdict_to_json(r.distality)},
              {"expansivity", verdict_to_json(r.expansivity)}};
}

}  // namespace affsphere
