#include "schubert/bruhat.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>

namespace schubert {

namespace {

struct MemoKey {
  std::string type;
  Word u, w;
  bool operator<(const MemoKey& o) const {
    return std::tie(type, u, w) < std::tie(o.type, o.u, o.w);
  }
};

bool bruhat_leq_impl(const WeylElement& u, const WeylElement& w) {
  if (w.is_identity()) return u.is_identity();
  if (u.is_identity()) return true;
  int lu = u.length();
  if (lu > w.length()) return false;

  static std::map<MemoKey, bool> memo;
  static std::mutex memo_mutex;
  MemoKey key{u.context().type().str(), u.canonical_word(), w.canonical_word()};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  int s = *left_descents(w).begin();
  WeylElement refl = WeylElement::simple_reflection(w.context(), s);
  WeylElement su = refl * u;
  const WeylElement& u2 = su.length() < lu ? su : u;
  bool result = bruhat_leq_impl(u2, refl * w);

  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  require_same_context(u, w);
  return bruhat_leq_impl(u, w);
}

bool bruhat_leq_subword_oracle(const WeylElement& u, const WeylElement& w, int length_cap) {
  require_same_context(u, w);
  const Word& word = w.canonical_word();
  if (static_cast<int>(word.size()) > length_cap)
    throw OracleTooLarge("subword oracle limited to length " + std::to_string(length_cap));
  const int lu = u.length();
  if (lu > static_cast<int>(word.size())) return false;
  // enumerate subsequences of length l(u)
  std::vector<int> idx(lu);
  const int n = static_cast<int>(word.size());
  std::function<bool(int, int)> search = [&](int pos, int start) -> bool {
    if (pos == lu) {
      Word sub;
      for (int k : idx) sub.push_back(word[k]);
      return WeylElement::from_word(w.context(), sub) == u;
    }
    for (int k = start; k <= n - (lu - pos); ++k) {
      idx[pos] = k;
      if (search(pos + 1, k + 1)) return true;
    }
    return false;
  };
  if (lu == 0) return true;
  return search(0, 0);
}

BruhatInterval interval(const WeylElement& bottom, const WeylElement& top, std::size_t cap) {
  require_same_context(bottom, top);
  if (!bruhat_leq(bottom, top))
    throw NotComparable("interval endpoints are not comparable in Bruhat order");

  // subword products of a fixed reduced word of top give exactly [id, top]
  std::unordered_set<WeylElement, WeylElementHash> lower{WeylElement::identity(bottom.context())};
  for (int i : top.canonical_word()) {
    WeylElement refl = WeylElement::simple_reflection(top.context(), i);
    std::vector<WeylElement> grown;
    for (const WeylElement& z : lower) grown.push_back(z * refl);
    for (WeylElement& z : grown) lower.insert(std::move(z));
    if (lower.size() > cap)
      throw CapExceeded("interval size exceeded cap of " + std::to_string(cap));
  }

  BruhatInterval iv{bottom, top, {}, {}};
  for (const WeylElement& z : lower)
    if (bruhat_leq(bottom, z)) iv.elements.push_back(z);
  std::sort(iv.elements.begin(), iv.elements.end(), WeylElementLess{});

  const int m = static_cast<int>(iv.elements.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (iv.elements[b].length() != iv.elements[a].length() + 1) continue;
      if (bruhat_leq(iv.elements[a], iv.elements[b])) iv.cover_relations.emplace_back(a, b);
    }
  return iv;
}

bool is_boolean_interval(const BruhatInterval& iv, int rank_cap) {
  const int k = iv.top.length() - iv.bottom.length();
  if (k > rank_cap)
    throw CapExceeded("Boolean recognition limited to rank " + std::to_string(rank_cap));
  if (iv.elements.size() != (std::size_t{1} << k)) return false;

  // rank sizes must be binomial(k, i)
  std::vector<std::size_t> rank_size(k + 1, 0);
  for (const WeylElement& z : iv.elements) {
    int r = z.length() - iv.bottom.length();
    if (r < 0 || r > k) return false;
    ++rank_size[r];
  }
  std::size_t binom = 1;
  for (int r = 0; r <= k; ++r) {
    if (rank_size[r] != binom) return false;
    binom = binom * (k - r) / (r + 1);
  }

  std::vector<int> atoms;
  for (int a = 0; a < static_cast<int>(iv.elements.size()); ++a)
    if (iv.elements[a].length() == iv.bottom.length() + 1) atoms.push_back(a);

  // each element must be determined by its set of atoms below it, and the
  // atom-set map must be an order isomorphism
  std::vector<std::uint32_t> atom_set(iv.elements.size(), 0);
  std::unordered_set<std::uint32_t> distinct;
  for (std::size_t z = 0; z < iv.elements.size(); ++z) {
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (bruhat_leq(iv.elements[atoms[a]], iv.elements[z]))
        atom_set[z] |= std::uint32_t{1} << a;
    if (!distinct.insert(atom_set[z]).second) return false;
  }
  for (std::size_t x = 0; x < iv.elements.size(); ++x)
    for (std::size_t y = 0; y < iv.elements.size(); ++y) {
      bool leq = bruhat_leq(iv.elements[x], iv.elements[y]);
      bool subset = (atom_set[x] & ~atom_set[y]) == 0;
      if (leq != subset) return false;
    }
  return true;
}

ProductIsomorphism check_product_isomorphism(const WeylElement& w, const LeviSubset& J,
                                             std::size_t cap) {
  const RootSystem& rs = w.context();
  WeylElement w0j = longest_element(rs, J);
  WeylElement c = w0j.inverse() * w;
  if (w.length() != w0j.length() + c.length() || !is_coxeter_type(c))
    throw NotHorospherical("w does not factor as w_{0,J} * (Coxeter-type c) with additive lengths");
  LeviSubset supp_c = support(c);
  for (int j : J)
    if (supp_c.count(j))
      throw NotHorospherical("supports of w_{0,J} and c are not disjoint");

  WeylElement id = WeylElement::identity(rs);
  BruhatInterval full = interval(id, w, cap);
  BruhatInterval left = interval(id, w0j, cap);
  BruhatInterval right = interval(id, c, cap);

  auto find_index = [](const std::vector<WeylElement>& v, const WeylElement& z) {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] == z) return static_cast<int>(k);
    return -1;
  };

  ProductIsomorphism result{false, w0j, c, {}};
  if (full.elements.size() != left.elements.size() * right.elements.size()) return result;

  std::vector<std::pair<int, int>> image;
  std::unordered_set<std::uint64_t> seen;
  for (const WeylElement& z : full.elements) {
    auto [u, v] = parabolic_decompose(z, J);
    int iu = find_index(left.elements, u);
    int iiv = find_index(right.elements, v);
    if (iu < 0 || iiv < 0) return result;
    if (!seen.insert((std::uint64_t{static_cast<std::uint32_t>(iu)} << 32) |
                     static_cast<std::uint32_t>(iiv))
             .second)
      return result;  // not injective
    image.emplace_back(iu, iiv);
  }

  // order preserved in both directions
  for (std::size_t a = 0; a < full.elements.size(); ++a)
    for (std::size_t b = 0; b < full.elements.size(); ++b) {
      bool leq = bruhat_leq(full.elements[a], full.elements[b]);
      bool prod_leq = bruhat_leq(left.elements[image[a].first], left.elements[image[b].first]) &&
                      bruhat_leq(right.elements[image[a].second], right.elements[image[b].second]);
      if (leq != prod_leq) return result;
    }

  result.ok = true;
  result.bijection = std::move(image);
  return result;
}

nlohmann::json interval_to_json(const BruhatInterval& iv) {
  nlohmann::json j;
  j["schema"] = 1;
  j["bottom"] = iv.bottom.canonical_word();
  j["top"] = iv.top.canonical_word();
  j["elements"] = nlohmann::json::array();
  for (const WeylElement& z : iv.elements) j["elements"].push_back(z.canonical_word());
  j["cover_relations"] = nlohmann::json::array();
  for (auto [a, b] : iv.cover_relations) j["cover_relations"].push_back({a, b});
  return j;
}

}  // namespace schubert
