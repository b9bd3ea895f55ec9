#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace rab;
using rab::fixtures::W1;
using rab::fixtures::W2;
using rab::fixtures::W3;

namespace {
  // Klein four-group: 0 = e, 1 = a, 2 = b, 3 = ab.
  LocalGroup klein() {
    return LocalGroup({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  }
}  // namespace

TEST_CASE("new_group validates orders and tables", "[graph_product]") {
  CHECK_THROWS_AS(GroupProduct(W1(), {1, 3}), Error);
  CHECK_THROWS_AS(GroupProduct(W1(), {2}), Error);
  CHECK_THROWS_AS(LocalGroup({{0, 1}, {1, 1}}), Error);          // no inverse for 1
  CHECK_THROWS_AS(LocalGroup({{1, 0}, {0, 1}}), Error);          // 0 not identity
  CHECK_THROWS_AS(LocalGroup({{0, 1}, {1, 2}}), Error);          // not closed
  CHECK_THROWS_AS(LocalGroup({{0, 1, 2}, {1, 2, 0}}), Error);    // not square
  // A quasigroup with identity 0 and inverses but no associativity.
  CHECK_THROWS_AS(LocalGroup({{0, 1, 2, 3, 4},
                              {1, 0, 3, 4, 2},
                              {2, 4, 0, 1, 3},
                              {3, 2, 4, 0, 1},
                              {4, 3, 1, 2, 0}}),
                  Error);
  CHECK_THROWS_AS(GroupProduct(W2(), {2, 2, 3}, {std::nullopt, klein(), std::nullopt}),
                  Error);  // order mismatch
  CHECK_NOTHROW(GroupProduct(W2(), {2, 4, 3}, {std::nullopt, klein(), std::nullopt}));
}

TEST_CASE("new_group examples", "[graph_product]") {
  GroupProduct free(W1(), {2, 3});
  CHECK(free.q(0) == 2);
  CHECK(free.q(1) == 3);
  // C2 * C3: s t s != t s s = t
  auto st = free.normal_form(std::vector<Syllable>{{0, 1}, {1, 1}});
  auto ts = free.normal_form(std::vector<Syllable>{{1, 1}, {0, 1}});
  CHECK(st != ts);

  GroupProduct x2(W2(), {2, 2, 2});
  auto rs = x2.normal_form(std::vector<Syllable>{{0, 1}, {1, 1}});
  auto sr = x2.normal_form(std::vector<Syllable>{{1, 1}, {0, 1}});
  CHECK(rs == sr);

  GroupProduct x3(W3(5), std::vector<std::size_t>(5, 3));
  CHECK(x3.system().rank() == 5);
  CHECK(x3.q(4) == 3);
}

TEST_CASE("normal_form examples", "[graph_product]") {
  GroupProduct G(W2(), {2, 2, 2});
  CHECK(G.normal_form(std::vector<Syllable>{{1, 1}, {1, 1}}).is_identity());
  auto x = G.normal_form(std::vector<Syllable>{{0, 1}, {1, 1}, {0, 1}});
  CHECK(x.syllables() == std::vector<Syllable>{{1, 1}});
  CHECK_THROWS_AS(G.normal_form(std::vector<Syllable>{{0, 2}}), Error);
  CHECK_THROWS_AS(G.normal_form(std::vector<Syllable>{{3, 1}}), Error);
  CHECK(G.normal_form(std::vector<Syllable>{{0, 0}}).is_identity());
}

TEST_CASE("normal_form agrees with the syllable rewriting oracle", "[graph_product][oracle]") {
  std::mt19937_64 rng(3);
  std::vector<GroupProduct> groups{
      GroupProduct(W3(5), std::vector<std::size_t>(5, 3)),
      GroupProduct(W2(), {2, 4, 3}, {std::nullopt, klein(), std::nullopt}),
      GroupProduct(W2(), {3, 4, 2})};
  for (auto const& G : groups) {
    for (int i = 0; i < 150; ++i) {
      auto raw = oracle::random_syllables(rng, G, 8);
      REQUIRE(G.normal_form(raw).syllables() == oracle::syllable_normal_form(G, raw));
    }
  }
}

TEST_CASE("mult and inv", "[graph_product][property]") {
  std::mt19937_64 rng(5);
  GroupProduct    G(W3(5), std::vector<std::size_t>(5, 3));
  auto            e = G.identity();
  for (int i = 0; i < 1000; ++i) {
    auto a = oracle::random_element(rng, G, 1 + rng() % 6);
    auto b = oracle::random_element(rng, G, 1 + rng() % 6);
    auto c = oracle::random_element(rng, G, 1 + rng() % 6);
    REQUIRE(G.mult(a, e) == a);
    REQUIRE(G.mult(e, a) == a);
    REQUIRE(G.mult(a, G.inv(a)).is_identity());
    REQUIRE(G.mult(G.inv(a), a).is_identity());
    REQUIRE(G.mult(G.mult(a, b), c) == G.mult(a, G.mult(b, c)));
  }
  CHECK(G.inv(e).is_identity());
  CHECK(G.inv(G.syllable(2, 1)).syllables() == std::vector<Syllable>{{2, 2}});

  GroupProduct K(W2(), {2, 4, 3}, {std::nullopt, klein(), std::nullopt});
  for (LocalIndex h = 1; h < 4; ++h) {
    CHECK(K.inv(K.syllable(1, h)) == K.syllable(1, h));
  }
}

TEST_CASE("type_map", "[graph_product]") {
  GroupProduct G(W2(), {2, 2, 2});
  auto const&  sys = G.system();
  CHECK(G.type_map(G.identity()).empty());
  CHECK(G.type_map(G.syllable(1, 1)).letters() == Word{1});
  auto rtr = G.normal_form(std::vector<Syllable>{{0, 1}, {2, 1}, {0, 1}});
  CHECK(G.type_map(rtr).letters() == parse_word(sys, "r t r"));
  CHECK(rtr.size() == 3);
  CHECK(oracle::syllable_normal_form(G, {{0, 1}, {2, 1}, {0, 1}}).size() == 3);
}

TEST_CASE("type_map is a homomorphism when every q is 2", "[graph_product][property]") {
  std::mt19937_64 rng(9);
  GroupProduct    G(W3(5), std::vector<std::size_t>(5, 2));
  for (int i = 0; i < 500; ++i) {
    auto a  = oracle::random_element(rng, G, rng() % 8);
    auto b  = oracle::random_element(rng, G, rng() % 8);
    REQUIRE(G.type_map(G.mult(a, b)) == multiply(G.system(), G.type_map(a), G.type_map(b)));
    REQUIRE(G.type_map(a).size() == a.size());
  }
}

TEST_CASE("type_map with larger local groups", "[graph_product][property]") {
  std::mt19937_64 rng(9);
  GroupProduct    G(W2(), {3, 4, 2}, {std::nullopt, klein(), std::nullopt});
  // Two s-syllables can merge into a nontrivial one, so (s,1)(s,1) has type
  // s rather than 1 and type_map is not multiplicative.
  auto x = G.syllable(0, 1);
  CHECK(G.type_map(G.mult(x, x)).letters() == Word{0});

  auto const& sys = G.system();
  for (int i = 0; i < 500; ++i) {
    auto a = oracle::random_element(rng, G, rng() % 8);
    REQUIRE(G.type_map(a).size() == a.size());
    for (Generator s = 0; s < sys.rank(); ++s) {
      // Extending by a non-descent letter multiplies the type by s.
      if (!is_right_descent(sys, G.type_map(a), s)) {
        auto ax = G.mult(a, Syllable{s, 1});
        REQUIRE(G.type_map(ax) == multiply(sys, G.type_map(a), reduce(sys, {s})));
      }
    }
  }
  // Onto: every w of length <= 4 is the type of some element.
  for (auto const& w : weyl_ball(sys, 4)) {
    std::vector<Syllable> raw;
    for (auto s : w) {
      raw.push_back({s, 1});
    }
    CHECK(G.type_map(G.normal_form(raw)) == w);
  }
}

TEST_CASE("group axioms on all short elements", "[graph_product][property]") {
  for (auto const& G : {GroupProduct(W2(), {2, 2, 3}), GroupProduct(W3(5), std::vector<std::size_t>(5, 2))}) {
    auto elems = G.elements(G.system().all(), 2);
    for (auto const& a : elems) {
      REQUIRE(G.mult(a, G.inv(a)).is_identity());
      for (auto const& b : elems) {
        std::vector<Syllable> cat = a.syllables();
        cat.insert(cat.end(), b.syllables().begin(), b.syllables().end());
        REQUIRE(G.mult(a, b).syllables() == oracle::syllable_normal_form(G, cat));
      }
    }
  }
}

TEST_CASE("element counts match the Weyl growth weighted by q - 1", "[graph_product][property]") {
  std::vector<GroupProduct> groups{GroupProduct(W2(), {2, 2, 3}),
                                   GroupProduct(W3(5), std::vector<std::size_t>(5, 3)),
                                   GroupProduct(W1(), {2, 3})};
  for (auto const& G : groups) {
    for (std::size_t n = 0; n <= 4; ++n) {
      std::size_t expected = 0;
      for (auto const& w : weyl_ball(G.system(), n)) {
        std::size_t weight = 1;
        for (auto s : w) {
          weight *= G.q(s) - 1;
        }
        expected += weight;
      }
      auto elems = G.elements(G.system().all(), n);
      CHECK(elems.size() == expected);
      std::set<GroupElement> distinct(elems.begin(), elems.end());
      CHECK(distinct.size() == elems.size());
    }
  }
}

TEST_CASE("coset_rep strips trailing syllables of J", "[graph_product]") {
  GroupProduct G(W2(), {2, 2, 3});
  // t r s  with J = {r, s}: both r and s can be moved to the end.
  auto x = G.normal_form(std::vector<Syllable>{{2, 1}, {0, 1}, {1, 1}});
  CHECK(G.coset_rep(x, singleton(0) | singleton(1)) == G.syllable(2, 1));
  CHECK(G.coset_rep(x, singleton(0)) == G.normal_form(std::vector<Syllable>{{2, 1}, {1, 1}}));
  CHECK(G.coset_rep(x, singleton(2)) == x);
}
