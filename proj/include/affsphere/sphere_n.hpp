#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affsphere/sphere_map.hpp"
#include "affsphere/witness.hpp"

namespace affsphere {

/// Coefficients of T_a^m(x) = (s_m a + T^m x) / ||s_m a + T^m x|| when T a = a.
struct SmLedger {
  /// s_1 .. s_m, s_1 = 1.
  std::vector<double> s;
  /// alpha_i = ||s_i a + T^i x|| for i = 1 .. m - 1.
  std::vector<double> alphas;
  /// Length of the component of a orthogonal to C(T).
  double alpha0 = 0.0;
  /// Unit normal to C(T) inside span(C(T), a).
  Vector a0;
  /// deviations[k] = ||normalized(s_{k+1} a + T^{k+1} x) - T_a^{k+1}(x)||.
  std::vector<double> deviations;
  bool x_in_contraction_space = false;
  /// s_m >= 1 + (m - 1) alpha0 - 1e-8 for every m in the ledger.
  bool divergence_bound_holds = false;

  double s_m() const { return s.back(); }
  double max_deviation() const;
};

/// Throws NormalizationRequired unless ||T a - a|| <= 1e-8 max(1, ||a||), and
/// InternalInconsistency when the closed form drifts from direct iteration by
/// more than 1e-8 m, or the divergence bound fails for x in C(T).
SmLedger sm_ledger(const AffineSphereSystem& sys, const Vector& x, int m);

json ledger_to_json(const SmLedger& l);

struct NondistalInstance {
  AffineSphereSystem system;
  Witness witness;
  /// The matrix handed in; system.T() differs from it after normalization.
  Matrix original_T;
  /// T was divided by this before building the system (1 when unchanged).
  double scale = 1.0;
  /// "rotation-plane", "positive-eigenvalue", "negative-eigenvalue" or "proximal".
  std::string construction;
};

/// Builds an offset a with ||T^-1 a|| < 1 for which the sphere map has a
/// fixed point, a period-2 point, or (proximal T, det > 0) a point attracting
/// the contraction sphere. Returns nullopt when none of these applies.
std::optional<NondistalInstance> construct_nondistal_instance(const Matrix& T);

/// Planar version of the rotation-plane construction: for B (2x2) returns
/// a2 and a unit x2 with a2 + B x2 = s x2, s > 0, and ||B^-1 a2|| < 1,
/// or nullopt when no such pair is reachable from the singular-value seed.
struct PlanarFixedPointSeed {
  Vector a2;
  Vector x2;
  double s = 0.0;
  double inverse_offset_norm = 0.0;
};
std::optional<PlanarFixedPointSeed> planar_fixed_point_seed(const Matrix& B, double s0);

enum class SearchMode { Power, Conjugate };
enum class SearchKind { Power, Conjugate };

std::string_view to_string(SearchKind k);

struct SearchResult {
  Matrix S;
  SearchKind kind = SearchKind::Power;
  /// k with S = T^k (Power); 1 for conjugates.
  int power = 1;
  /// P with S = P T P^-1 (identity for Power).
  Matrix conjugator;
  Vector a;
  AffineSphereSystem system;
  Witness witness;
  std::string construction;
};

/// Power mode tries T, T^2, T^3 and falls back to conjugation; conjugate
/// mode shears the rotation plane of T until a fixed point becomes reachable.
/// Throws SearchExhausted when nothing works.
SearchResult conjugate_or_power_search(const Matrix& T, SearchMode mode = SearchMode::Power,
                                       std::uint64_t seed = kDefaultSeed);

json search_to_json(const SearchResult& r);

/// T-invariant plane containing the offset (for a = 0: the first invariant
/// plane). nullopt when no candidate plane contains a within 1e-8.
std::optional<Frame2> plane_containing_offset(const AffineSphereSystem& sys);

/// Pair on the invariant circle W cap S^n staying delta-close for |n| <= horizon.
/// Throws WitnessNotFound when no pair passes at separation 1e-7, or when a
/// does not lie in an invariant plane.
Witness nonexpansive_witness(const AffineSphereSystem& sys, double delta = 0.01, int horizon = 500,
                             std::uint64_t seed = kDefaultSeed);
Witness nonexpansive_witness(const AffineSphereSystem& sys, const Frame2& plane, double delta = 0.01,
                             int horizon = 500, std::uint64_t seed = kDefaultSeed);

}  // namespace affsphere
