#pragma once

#include <nlohmann/json.hpp>
#include <utility>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

/// A Bruhat interval [bottom, top]: elements sorted by (length, canonical
/// word), cover relations as index pairs (lower, upper) into elements.
struct BruhatInterval {
  WeylElement bottom;
  WeylElement top;
  std::vector<WeylElement> elements;
  std::vector<std::pair<int, int>> cover_relations;
};

/// u <= w in Bruhat-Chevalley order, by the descent recursion with
/// memoization.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

/// Test oracle: some subsequence of the canonical reduced word of w is a
/// reduced word of u. Guarded by a length bound on w.
bool bruhat_leq_subword_oracle(const WeylElement& u, const WeylElement& w,
                               int length_cap = 20);

BruhatInterval interval(const WeylElement& bottom, const WeylElement& top,
                        std::size_t cap = 1000000);

/// Whether the interval poset is isomorphic to the Boolean lattice of rank
/// l(top) - l(bottom), via the atom-set characterization.
bool is_boolean_interval(const BruhatInterval& iv, int rank_cap = 12);

struct ProductIsomorphism {
  bool ok = false;
  WeylElement levi_factor;     // w_{0,J}
  WeylElement coxeter_factor;  // c
  /// On success, for each element of [id, w] (in sorted order) the indices of
  /// its image in [id, w_{0,J}] x [id, c].
  std::vector<std::pair<int, int>> bijection;
};

/// Corollary-style check that [id, w] factors as [id, w_{0,J}] x [id, c] as
/// posets, for w = w_{0,J} c horospherical. Throws NotHorospherical when the
/// decomposition does not exist.
ProductIsomorphism check_product_isomorphism(const WeylElement& w, const LeviSubset& J,
                                             std::size_t cap = 1000000);

nlohmann::json interval_to_json(const BruhatInterval& iv);

}  // namespace schubert
