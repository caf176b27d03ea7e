#include "schubert/classify.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace schubert {

namespace {

void require_levi_in_descents(const WeylElement& w, const LeviSubset& J) {
  LeviSubset desc = left_descents(w);
  for (int j : J)
    if (!desc.count(j))
      throw LeviNotInDescents("J not contained in left descent set: index " + std::to_string(j));
}

bool spherical_for_some_levi(const WeylElement& v) {
  // search all subsets of I_v
  LeviSubset desc_set = left_descents(v);
  std::vector<int> desc(desc_set.begin(), desc_set.end());
  const std::size_t n = desc.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    LeviSubset J;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::size_t{1} << b)) J.insert(desc[b]);
    if (is_spherical(v, J).ok) return true;
  }
  return false;
}

}  // namespace

bool is_toric(const WeylElement& w) { return is_coxeter_type(w); }

SphericalVerdict is_spherical(const WeylElement& w, const LeviSubset& J) {
  require_levi_in_descents(w, J);
  WeylElement w0j = longest_element(w.context(), J);
  WeylElement c = w0j.inverse() * w;
  bool ok = w.length() == w0j.length() + c.length() && is_coxeter_type(c);
  return SphericalVerdict{ok, std::move(w0j), std::move(c)};
}

SphericalVerdict is_horospherical(const WeylElement& w, const LeviSubset& J) {
  SphericalVerdict v = is_spherical(w, J);
  if (!v.ok) return v;
  LeviSubset supp_c = support(v.coxeter_factor);
  for (int j : J)
    if (supp_c.count(j)) {
      v.ok = false;
      return v;
    }
  return v;
}

bool is_nonsingular_horospherical(const WeylElement& w, const LeviSubset& J) {
  SphericalVerdict v = is_horospherical(w, J);
  if (!v.ok) throw NotHorospherical("(w, J) is not horospherical");
  LeviSubset supp = support(v.coxeter_factor);
  std::vector<int> letters(supp.begin(), supp.end());
  for (std::size_t a = 0; a < letters.size(); ++a)
    for (std::size_t b = a + 1; b < letters.size(); ++b)
      if (w.context().cartan_entry(letters[a], letters[b]) != 0) return false;
  return true;
}

NearlyToricVerdict is_nearly_toric(const WeylElement& w) {
  for (int alpha : left_descents(w)) {
    WeylElement c = WeylElement::simple_reflection(w.context(), alpha) * w;
    if (!is_coxeter_type(c)) continue;
    if (!support(c).count(alpha)) continue;
    return NearlyToricVerdict{true, alpha, std::move(c)};
  }
  return NearlyToricVerdict{};
}

bool is_doubly_spherical(const WeylElement& w, std::size_t cap) {
  WeylElement id = WeylElement::identity(w.context());
  BruhatInterval iv = interval(id, w, cap);
  static std::map<std::pair<std::string, Word>, bool> memo;
  for (const WeylElement& v : iv.elements) {
    auto key = std::make_pair(w.context().type().str(), v.canonical_word());
    auto it = memo.find(key);
    bool ok = it != memo.end() ? it->second : spherical_for_some_levi(v);
    if (it == memo.end()) memo.emplace(std::move(key), ok);
    if (!ok) return false;
  }
  return true;
}

bool is_simple_variety(const WeylElement& w, const LeviSubset& J) {
  require_levi_in_descents(w, J);
  return w == longest_element(w.context(), J);
}

bool is_wonderful(const WeylElement& w, const LeviSubset& J) { return is_simple_variety(w, J); }

long long count_closed_orbits(const WeylElement& w, const LeviSubset& J, std::size_t cap) {
  require_levi_in_descents(w, J);
  auto [u, v] = parabolic_decompose(w, J);
  WeylElement id = WeylElement::identity(w.context());
  BruhatInterval iv = interval(id, v, cap);
  long long count = 0;
  for (const WeylElement& z : iv.elements) {
    LeviSubset desc = left_descents(z);
    bool minimal = true;
    for (int j : J)
      if (desc.count(j)) {
        minimal = false;
        break;
      }
    if (minimal) ++count;
  }
  return count;
}

WeylElement construct_prescribed(const RootSystem& rs, const LeviSubset& J) {
  if (J.empty()) throw EmptyLevi("construct_prescribed requires a nonempty Levi subset");
  if (!is_connected_diagram(rs))
    throw DisconnectedDiagram("construct_prescribed requires a connected Dynkin diagram");
  for (int j : J)
    if (j < 1 || j > rs.rank()) throw IndexOutOfRange("Levi index out of range");

  WeylElement w = WeylElement::identity(rs);
  if (static_cast<int>(J.size()) == rs.rank()) {
    w = longest_element(rs, J);
  } else {
    int alpha = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!J.count(i) && simple_root_adjacent(rs, i, J)) {
        alpha = i;
        break;
      }
    }
    if (alpha == 0)
      throw DisconnectedDiagram("no simple root outside J is adjacent to J");
    w = longest_element(rs, J) * WeylElement::simple_reflection(rs, alpha);
  }

  if (left_descents(w) != J)
    throw InternalInconsistency("construct_prescribed: descent set mismatch");
  if (!is_horospherical(w, J).ok)
    throw InternalInconsistency("construct_prescribed: output not horospherical");
  if (!is_nonsingular_horospherical(w, J))
    throw InternalInconsistency("construct_prescribed: nonsingularity criterion failed");
  return w;
}

Classification classify_full(const WeylElement& w, std::optional<LeviSubset> J_opt,
                             std::size_t cap) {
  LeviSubset J = J_opt ? *J_opt : left_descents(w);
  require_levi_in_descents(w, J);

  Classification c;
  c.word = w.canonical_word();
  c.levi = J;
  c.is_toric = is_toric(w);

  SphericalVerdict sph = is_spherical(w, J);
  c.is_spherical = sph.ok;
  SphericalVerdict horo = is_horospherical(w, J);
  c.is_horospherical = horo.ok;
  if (horo.ok) c.is_nonsingular_horospherical = is_nonsingular_horospherical(w, J);

  NearlyToricVerdict nt = is_nearly_toric(w);
  c.is_nearly_toric = nt.ok;
  c.is_doubly_spherical = is_doubly_spherical(w, cap);
  c.is_simple_variety = is_simple_variety(w, J);
  c.is_wonderful = is_wonderful(w, J);
  c.closed_orbit_count = count_closed_orbits(w, J, cap);

  if (sph.ok || horo.ok || nt.ok) {
    Witness wit;
    if (sph.ok) {
      wit.levi_factor = sph.levi_factor.canonical_word();
      wit.coxeter_factor = sph.coxeter_factor.canonical_word();
    }
    if (nt.ok) {
      wit.alpha = nt.alpha;
      if (!sph.ok) wit.coxeter_factor = nt.coxeter_factor->canonical_word();
    }
    c.witness = std::move(wit);
  }

  if (c.is_horospherical && !c.is_spherical)
    throw InternalInconsistency("horospherical without spherical");
  if (c.is_wonderful != c.is_simple_variety)
    throw InternalInconsistency("wonderful and simple flags disagree");
  if (c.is_nearly_toric && !c.is_doubly_spherical)
    throw InternalInconsistency("nearly toric element is not doubly spherical");
  return c;
}

nlohmann::json classification_to_json(const Classification& c) {
  nlohmann::json j;
  j["schema"] = 1;
  j["word"] = c.word;
  j["levi"] = std::vector<int>(c.levi.begin(), c.levi.end());
  j["is_toric"] = c.is_toric;
  j["is_spherical"] = c.is_spherical;
  j["is_horospherical"] = c.is_horospherical;
  j["is_nearly_toric"] = c.is_nearly_toric;
  j["is_doubly_spherical"] = c.is_doubly_spherical;
  j["is_simple_variety"] = c.is_simple_variety;
  j["is_wonderful"] = c.is_wonderful;
  if (c.is_nonsingular_horospherical)
    j["is_nonsingular_horospherical"] = *c.is_nonsingular_horospherical;
  else
    j["is_nonsingular_horospherical"] = nullptr;
  if (c.closed_orbit_count) j["closed_orbit_count"] = *c.closed_orbit_count;
  if (c.witness) {
    nlohmann::json w;
    w["levi_factor"] = c.witness->levi_factor;
    w["coxeter_factor"] = c.witness->coxeter_factor;
    if (c.witness->alpha) w["alpha"] = *c.witness->alpha;
    j["witness"] = w;
  }
  return j;
}

}  // namespace schubert
