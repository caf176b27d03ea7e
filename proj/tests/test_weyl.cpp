#include <doctest.h>

#include <algorithm>
#include <map>

#include "schubert/weyl.hpp"

using namespace schubert;

namespace {

bool root_eq(const Root& a, const Root& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

Root make_root(const std::vector<int>& coords) {
  Root r(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) r(static_cast<int>(i)) = coords[i];
  return r;
}

}  // namespace

TEST_CASE("group arithmetic basics") {
  RootSystem rs(CartanType::parse("A2"));
  WeylElement s1 = WeylElement::simple_reflection(rs, 1);
  WeylElement s2 = WeylElement::simple_reflection(rs, 2);
  CHECK(s1 * s1 == WeylElement::identity(rs));
  CHECK(root_eq(s1.apply(rs.simple_root(2)), make_root({1, 1})));
  CHECK((s1 * s2).inverse() == s2 * s1);
  CHECK(WeylElement::from_word(rs, {1, 2, 1}) == WeylElement::from_word(rs, {2, 1, 2}));
}

TEST_CASE("context mismatch is rejected") {
  RootSystem a2(CartanType::parse("A2"));
  RootSystem b2(CartanType::parse("B2"));
  CHECK_THROWS_AS((void)(WeylElement::identity(a2) * WeylElement::identity(b2)),
                  ContextMismatch);
}

TEST_CASE("length") {
  RootSystem rs(CartanType::parse("A2"));
  CHECK(WeylElement::identity(rs).length() == 0);
  CHECK(WeylElement::from_word(rs, {1, 2, 1}).length() == 3);
  CHECK(WeylElement::from_word(rs, {1, 2}).length() == 2);
}

TEST_CASE("inversion sets") {
  RootSystem rs(CartanType::parse("A2"));
  CHECK(inversion_set(WeylElement::identity(rs)).empty());
  auto inv_s1 = inversion_set(WeylElement::simple_reflection(rs, 1));
  REQUIRE(inv_s1.size() == 1);
  CHECK(root_eq(inv_s1[0], make_root({1, 0})));
  // R+(s1s2) = {a2, a1+a2}, inversions found by applying the element
  auto inv = inversion_set(WeylElement::from_word(rs, {1, 2}));
  REQUIRE(inv.size() == 2);
  CHECK(root_eq(inv[0], make_root({0, 1})));
  CHECK(root_eq(inv[1], make_root({1, 1})));
}

TEST_CASE("canonical and all reduced words") {
  RootSystem rs(CartanType::parse("A2"));
  CHECK(WeylElement::identity(rs).canonical_word().empty());
  WeylElement w0 = WeylElement::from_word(rs, {1, 2, 1});
  CHECK(w0.canonical_word() == Word{1, 2, 1});
  auto rw = all_reduced_words(w0);
  CHECK_FALSE(rw.truncated);
  REQUIRE(rw.words.size() == 2);
  CHECK(rw.words[0] == Word{1, 2, 1});
  CHECK(rw.words[1] == Word{2, 1, 2});

  RootSystem a3(CartanType::parse("A3"));
  auto rw13 = all_reduced_words(WeylElement::from_word(a3, {1, 3}));
  REQUIRE(rw13.words.size() == 2);
  CHECK(rw13.words[0] == Word{1, 3});
  CHECK(rw13.words[1] == Word{3, 1});
}

TEST_CASE("reduced word cap sets the truncation flag") {
  RootSystem rs(CartanType::parse("A2"));
  auto rw = all_reduced_words(WeylElement::from_word(rs, {1, 2, 1}), 1);
  CHECK(rw.truncated);
  CHECK(rw.words.size() == 1);
}

TEST_CASE("support and descents") {
  RootSystem a2(CartanType::parse("A2"));
  RootSystem a3(CartanType::parse("A3"));
  CHECK(support(WeylElement::identity(a2)).empty());
  CHECK(support(WeylElement::from_word(a2, {1, 2, 1})) == LeviSubset{1, 2});
  CHECK(support(WeylElement::from_word(a3, {1, 3})) == LeviSubset{1, 3});
  CHECK(left_descents(WeylElement::identity(a2)).empty());
  CHECK(left_descents(WeylElement::from_word(a2, {1, 2, 1})) == LeviSubset{1, 2});
  CHECK(left_descents(WeylElement::from_word(a2, {2, 1})) == LeviSubset{2});
}

TEST_CASE("coxeter type") {
  RootSystem rs(CartanType::parse("A2"));
  CHECK(is_coxeter_type(WeylElement::identity(rs)));
  CHECK(is_coxeter_type(WeylElement::from_word(rs, {1, 2})));
  CHECK_FALSE(is_coxeter_type(WeylElement::from_word(rs, {1, 2, 1})));
}

TEST_CASE("parabolic longest elements") {
  RootSystem a2(CartanType::parse("A2"));
  CHECK(longest_element(a2, {}) == WeylElement::identity(a2));
  CHECK(longest_element(a2, {1, 2}).length() == 3);
  RootSystem a3(CartanType::parse("A3"));
  WeylElement w = longest_element(a3, {1, 3});
  CHECK(w == WeylElement::from_word(a3, {1, 3}));
  CHECK(w.length() == 2);
}

TEST_CASE("minimal coset representatives") {
  RootSystem a2(CartanType::parse("A2"));
  CHECK(min_coset_reps(a2, {1, 2}).size() == 1);
  auto reps = min_coset_reps(a2, {1});
  REQUIRE(reps.size() == 3);
  CHECK(reps[0] == WeylElement::identity(a2));
  CHECK(reps[1] == WeylElement::simple_reflection(a2, 2));
  CHECK(reps[2] == WeylElement::from_word(a2, {2, 1}));
  RootSystem a3(CartanType::parse("A3"));
  CHECK(min_coset_reps(a3, {1, 2}).size() == 4);
}

TEST_CASE("group enumeration") {
  RootSystem a2(CartanType::parse("A2"));
  auto all = enumerate_group(a2);
  REQUIRE(all.size() == 6);
  std::map<int, int> profile;
  for (const auto& w : all) ++profile[w.length()];
  CHECK(profile == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
  // lengths are nondecreasing in the output
  for (std::size_t k = 1; k < all.size(); ++k)
    CHECK(all[k - 1].length() <= all[k].length());

  CHECK(enumerate_group(RootSystem(CartanType::parse("G2"))).size() == 12);
  CHECK(enumerate_group(RootSystem(CartanType::parse("A3")), 1).size() == 4);
  CHECK_THROWS_AS(enumerate_group(RootSystem(CartanType::parse("A3")), std::nullopt, 10),
                  CapExceeded);
}

TEST_CASE("parabolic decomposition") {
  RootSystem a2(CartanType::parse("A2"));
  WeylElement id = WeylElement::identity(a2);
  auto [u0, v0] = parabolic_decompose(id, {1});
  CHECK(u0 == id);
  CHECK(v0 == id);

  WeylElement w0 = WeylElement::from_word(a2, {1, 2, 1});
  auto [u, v] = parabolic_decompose(w0, {1});
  CHECK(u == WeylElement::simple_reflection(a2, 1));
  CHECK(v == WeylElement::from_word(a2, {2, 1}));
  CHECK(left_descents(v).count(1) == 0);

  auto [uf, vf] = parabolic_decompose(w0, {1, 2});
  CHECK(uf == w0);
  CHECK(vf == id);
}

TEST_CASE("exhaustive properties over small groups") {
  for (const char* name : {"A3", "B2", "G2"}) {
    CAPTURE(name);
    RootSystem rs(CartanType::parse(name));
    auto all = enumerate_group(rs);
    for (const auto& w : all) {
      CHECK(w.length() == w.inverse().length());
      CHECK(static_cast<int>(w.canonical_word().size()) == w.length());
      // every reduced word multiplies back to w with letter set = support
      auto rw = all_reduced_words(w);
      LeviSubset supp = support(w);
      for (const Word& word : rw.words) {
        CHECK(WeylElement::from_word(rs, word) == w);
        CHECK(LeviSubset(word.begin(), word.end()) == supp);
        CHECK(word >= w.canonical_word());  // canonical word is lex-smallest
      }
      // descents match the simple roots of the left inversion set
      LeviSubset desc_from_inv;
      for (const Root& beta : left_inversion_set(w))
        if (beta.sum() == 1)
          for (int i = 0; i < rs.rank(); ++i)
            if (beta(i) == 1) desc_from_inv.insert(i + 1);
      CHECK(desc_from_inv == left_descents(w));
    }
    // |^JW| * |W_J| = |W| for every J, and the decomposition is consistent
    std::vector<int> gens;
    for (int i = 1; i <= rs.rank(); ++i) gens.push_back(i);
    for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
      LeviSubset J;
      for (std::size_t b = 0; b < gens.size(); ++b)
        if (mask & (std::size_t{1} << b)) J.insert(gens[b]);
      std::size_t wj_order = 0;
      for (const auto& u : all) {
        LeviSubset supp = support(u);
        if (std::all_of(supp.begin(), supp.end(), [&](int i) { return J.count(i) > 0; }))
          ++wj_order;
      }
      CHECK(min_coset_reps(rs, J).size() * wj_order == all.size());
      for (const auto& w : all) {
        auto [u, v] = parabolic_decompose(w, J);
        CHECK(u * v == w);
        CHECK(u.length() + v.length() == w.length());
        LeviSubset su = support(u);
        CHECK(std::all_of(su.begin(), su.end(), [&](int i) { return J.count(i) > 0; }));
        LeviSubset dv = left_descents(v);
        CHECK(std::none_of(dv.begin(), dv.end(), [&](int i) { return J.count(i) > 0; }));
      }
    }
  }
}

TEST_CASE("group orders via enumeration") {
  CHECK(enumerate_group(RootSystem(CartanType::parse("B3"))).size() == 48);
  CHECK(enumerate_group(RootSystem(CartanType::parse("D4"))).size() == 192);
}
