#pragma once

#include <nlohmann/json.hpp>
#include <optional>

#include "schubert/bruhat.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// Witness data for the decomposition-based criteria: w = w_{0,J} c (levi
/// and Coxeter factors as canonical words) and, for the nearly toric case,
/// the simple reflection alpha with w = s_alpha c.
struct Witness {
  Word levi_factor;     // canonical word of w_{0,J}
  Word coxeter_factor;  // canonical word of c
  std::optional<int> alpha;
};

struct Classification {
  Word word;
  LeviSubset levi;
  bool is_toric = false;
  bool is_spherical = false;
  bool is_horospherical = false;
  bool is_nearly_toric = false;
  bool is_doubly_spherical = false;
  bool is_simple_variety = false;
  bool is_wonderful = false;
  /// Sufficient-condition flag: set only when horospherical; absent means
  /// unknown, never "singular".
  std::optional<bool> is_nonsingular_horospherical;
  std::optional<long long> closed_orbit_count;
  std::optional<Witness> witness;
};

struct SphericalVerdict {
  bool ok = false;
  WeylElement levi_factor;     // w_{0,J}
  WeylElement coxeter_factor;  // c
};

struct NearlyToricVerdict {
  bool ok = false;
  int alpha = 0;
  std::optional<WeylElement> coxeter_factor;
};

/// l(w) = |supp(w)|, i.e. w is Coxeter-type.
bool is_toric(const WeylElement& w);

/// w = w_{0,J} c with additive lengths and c Coxeter-type. Requires J inside
/// the left descent set of w.
SphericalVerdict is_spherical(const WeylElement& w, const LeviSubset& J);

/// Spherical with supp(c) disjoint from J.
SphericalVerdict is_horospherical(const WeylElement& w, const LeviSubset& J);

/// Sufficient nonsingularity criterion: the letters of the Coxeter factor
/// pairwise commute. Throws NotHorospherical unless is_horospherical holds.
bool is_nonsingular_horospherical(const WeylElement& w, const LeviSubset& J);

/// w = s_alpha c with c Coxeter-type, alpha in supp(c), l(w) = l(c) + 1;
/// the witness Levi is the singleton {alpha}.
NearlyToricVerdict is_nearly_toric(const WeylElement& w);

/// Every v <= w is spherical for some J inside its left descent set.
bool is_doubly_spherical(const WeylElement& w, std::size_t cap = 1000000);

bool is_simple_variety(const WeylElement& w, const LeviSubset& J);
bool is_wonderful(const WeylElement& w, const LeviSubset& J);

/// |{u <= v : u in ^JW}| where w = w_{0,J} v with additive lengths.
long long count_closed_orbits(const WeylElement& w, const LeviSubset& J,
                              std::size_t cap = 1000000);

/// The element w = w_{0,J} s_alpha (or w_0 for full J) whose Schubert
/// variety has left descent set exactly J and is horospherical with the
/// nonsingularity criterion satisfied; all three postconditions verified.
WeylElement construct_prescribed(const RootSystem& rs, const LeviSubset& J);

/// Aggregates all criteria. Without an explicit J the Levi-dependent flags
/// use J = I_w; the Levi-free flags always ignore J.
Classification classify_full(const WeylElement& w,
                             std::optional<LeviSubset> J = std::nullopt,
                             std::size_t cap = 1000000);

nlohmann::json classification_to_json(const Classification& c);

}  // namespace schubert
