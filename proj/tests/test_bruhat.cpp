#include <doctest.h>

#include "schubert/bruhat.hpp"

using namespace schubert;

TEST_CASE("bruhat_leq basics") {
  RootSystem rs(CartanType::parse("A2"));
  WeylElement id = WeylElement::identity(rs);
  WeylElement s1 = WeylElement::simple_reflection(rs, 1);
  WeylElement s2 = WeylElement::simple_reflection(rs, 2);
  WeylElement w0 = WeylElement::from_word(rs, {1, 2, 1});
  for (const auto& w : enumerate_group(rs)) CHECK(bruhat_leq(id, w));
  CHECK(bruhat_leq(WeylElement::from_word(rs, {1, 2}), w0));
  CHECK_FALSE(bruhat_leq(s1, s2));
  CHECK_FALSE(bruhat_leq(w0, s1));
  RootSystem b2(CartanType::parse("B2"));
  CHECK_THROWS_AS(bruhat_leq(WeylElement::identity(b2), s1), ContextMismatch);
}

TEST_CASE("subword oracle examples") {
  RootSystem rs(CartanType::parse("A2"));
  WeylElement w0 = WeylElement::from_word(rs, {1, 2, 1});
  CHECK(bruhat_leq_subword_oracle(WeylElement::simple_reflection(rs, 2), w0));
  CHECK_FALSE(bruhat_leq_subword_oracle(w0, WeylElement::from_word(rs, {1, 2})));
  CHECK(bruhat_leq_subword_oracle(WeylElement::from_word(rs, {2, 1}), w0));
  CHECK_THROWS_AS(bruhat_leq_subword_oracle(w0, w0, 2), OracleTooLarge);
}

TEST_CASE("oracle agreement on all pairs of W(A3) and W(B2)") {
  for (const char* name : {"A3", "B2"}) {
    CAPTURE(name);
    RootSystem rs(CartanType::parse(name));
    auto all = enumerate_group(rs);
    for (const auto& u : all)
      for (const auto& w : all)
        CHECK(bruhat_leq(u, w) == bruhat_leq_subword_oracle(u, w));
  }
}

TEST_CASE("bruhat order is a graded partial order") {
  RootSystem rs(CartanType::parse("B2"));
  auto all = enumerate_group(rs);
  for (const auto& u : all) {
    CHECK(bruhat_leq(u, u));
    for (const auto& v : all) {
      if (bruhat_leq(u, v)) {
        CHECK(u.length() <= v.length());
        if (u.length() == v.length()) CHECK(u == v);
        if (bruhat_leq(v, u)) CHECK(u == v);
      }
      for (const auto& w : all)
        if (bruhat_leq(u, v) && bruhat_leq(v, w)) CHECK(bruhat_leq(u, w));
    }
  }
}

TEST_CASE("interval extraction") {
  RootSystem rs(CartanType::parse("A2"));
  WeylElement id = WeylElement::identity(rs);
  CHECK(interval(id, WeylElement::simple_reflection(rs, 1)).elements.size() == 2);
  BruhatInterval whole = interval(id, WeylElement::from_word(rs, {1, 2, 1}));
  CHECK(whole.elements.size() == 6);
  // graded cover relations: each cover raises length by exactly one
  for (auto [a, b] : whole.cover_relations)
    CHECK(whole.elements[b].length() == whole.elements[a].length() + 1);

  RootSystem a3(CartanType::parse("A3"));
  BruhatInterval diamond =
      interval(WeylElement::identity(a3), WeylElement::from_word(a3, {1, 3}));
  CHECK(diamond.elements.size() == 4);
  CHECK_THROWS_AS(interval(WeylElement::simple_reflection(rs, 1),
                           WeylElement::simple_reflection(rs, 2)),
                  NotComparable);
  CHECK_THROWS_AS(interval(id, WeylElement::from_word(rs, {1, 2, 1}), 3), CapExceeded);
}

TEST_CASE("boolean interval recognition") {
  RootSystem a3(CartanType::parse("A3"));
  WeylElement id3 = WeylElement::identity(a3);
  CHECK(is_boolean_interval(interval(id3, WeylElement::from_word(a3, {1, 3}))));

  RootSystem a2(CartanType::parse("A2"));
  WeylElement id2 = WeylElement::identity(a2);
  CHECK_FALSE(is_boolean_interval(interval(id2, WeylElement::from_word(a2, {1, 2, 1}))));
  // one-point interval is Boolean of rank 0
  CHECK(is_boolean_interval(interval(id2, id2)));
  // [id, c] for Coxeter-type c is always Boolean
  for (const char* name : {"A3", "B2", "G2"}) {
    RootSystem rs(CartanType::parse(name));
    for (const auto& c : enumerate_group(rs))
      if (is_coxeter_type(c))
        CHECK(is_boolean_interval(interval(WeylElement::identity(rs), c)));
  }
}

TEST_CASE("product isomorphism") {
  RootSystem a3(CartanType::parse("A3"));
  auto res = check_product_isomorphism(WeylElement::from_word(a3, {1, 3}), {1});
  CHECK(res.ok);
  CHECK(res.bijection.size() == 4);

  RootSystem a2(CartanType::parse("A2"));
  auto full = check_product_isomorphism(WeylElement::from_word(a2, {1, 2, 1}), {1, 2});
  CHECK(full.ok);
  CHECK(full.coxeter_factor == WeylElement::identity(a2));

  CHECK_THROWS_AS(check_product_isomorphism(WeylElement::from_word(a2, {1, 2, 1}), {1}),
                  NotHorospherical);
}

TEST_CASE("interval json dump is stable") {
  RootSystem rs(CartanType::parse("A2"));
  BruhatInterval iv =
      interval(WeylElement::identity(rs), WeylElement::from_word(rs, {1, 2, 1}));
  nlohmann::json j = interval_to_json(iv);
  CHECK(j["elements"].size() == 6);
  CHECK(j["elements"][0] == nlohmann::json::array());
  CHECK(j["elements"][5] == nlohmann::json::array({1, 2, 1}));
  CHECK(j["schema"] == 1);
}
