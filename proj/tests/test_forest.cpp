#include <catch_amalgamated.hpp>

#include <set>

#include "vcube/forest.hpp"

using namespace vcube;

namespace {

PlanarForest F(std::string_view text) { return parse_forest(text); }
std::string S(const PlanarForest& f) { return serialize_forest(f); }

// PF_n(k) grown by inserting edges into PF_n(k-1), starting from the trivial forest.
std::vector<std::set<std::string>> insertion_closure(int n) {
  std::string trivial;
  for (int i = 1; i <= n; ++i) trivial += (i > 1 ? "," : "") + std::to_string(i);
  std::vector<std::set<std::string>> levels{{trivial}};
  for (int k = 1; k < n; ++k) {
    std::set<std::string> next;
    for (const auto& text : levels.back()) {
      PlanarForest f = F(text);
      for (const auto& site : insertion_sites(f)) next.insert(S(insert_edge(f, site).forest));
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("parse and serialize") {
  PlanarForest f = F("((1 2) 3)");
  CHECK(f.trees().size() == 1);
  CHECK(internal_edges(f).size() == 2);
  CHECK(S(f) == "((1 2) 3)");

  PlanarForest g = F("3,(1 2)");
  CHECK(g.trees().size() == 2);
  CHECK(S(g) == "(1 2),3");

  CHECK(S(F("((2 1) 3)")) == "((2 1) 3)");
  CHECK(S(F("1,2,3")) == "1,2,3");
  CHECK(F("3,(1 2)").n() == 3);
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(F("((1) 2)"), ForestError);
  CHECK_THROWS_AS(F("(1 1)"), ForestError);
  CHECK_THROWS_AS(F("(1 3)"), ForestError);
  CHECK_THROWS_AS(F("(1 2"), ForestError);
  CHECK_THROWS_AS(F("(1 2 )"), ForestError);
  CHECK_THROWS_AS(F("( 1 2)"), ForestError);
  CHECK_THROWS_AS(F("1,,2"), ForestError);
  CHECK_THROWS_AS(F(""), ForestError);
  CHECK_THROWS_AS(F("(0 1)"), ForestError);
  CHECK_THROWS_AS(F("(1 2)x"), ForestError);
}

TEST_CASE("extra whitespace between children and trees is tolerated") {
  CHECK(S(F("(1  2)")) == "(1 2)");
  CHECK(S(F("(1 2) , 3\n")) == "(1 2),3");
}

TEST_CASE("canonicalize") {
  CHECK(S(canonicalize(F("3,(1 2)"))) == "(1 2),3");
  CHECK(S(canonicalize(F("(2 1),3"))) == "(2 1),3");
  CHECK(S(canonicalize(F("2,(3 4),1"))) == "1,2,(3 4)");
  CHECK(is_canonical(F("(2 1),3")));
  CHECK_FALSE(is_canonical(F("3,(1 2)")));
  PlanarForest c = canonicalize(F("(3 4),2,1"));
  CHECK(canonicalize(c) == c);
  CHECK(canonicalize(F("2,1,(3 4)")) == c);
}

TEST_CASE("enumerate_forests small counts") {
  auto pf30 = enumerate_forests(3, 0);
  REQUIRE(pf30.size() == 1);
  CHECK(S(pf30[0]) == "1,2,3");
  CHECK(enumerate_forests(3, 2).size() == 12);
  auto pf31 = enumerate_forests(3, 1);
  CHECK(pf31.size() == 12);
  std::size_t pairs = 0, triples = 0;
  for (const auto& f : pf31) (f.trees().size() == 2 ? pairs : triples)++;
  CHECK(pairs == 6);
  CHECK(triples == 6);
  CHECK_THROWS_AS(enumerate_forests(3, 3), std::out_of_range);
  CHECK_THROWS_AS(enumerate_forests(0, 0), std::out_of_range);
}

TEST_CASE("enumerate_forests agrees with the insertion closure") {
  for (int n = 1; n <= 5; ++n) {
    auto levels = insertion_closure(n);
    for (int k = 0; k < n; ++k) {
      auto listed = enumerate_forests(n, k);
      std::set<std::string> texts;
      for (const auto& f : listed) texts.insert(S(f));
      INFO("n=" << n << " k=" << k);
      CHECK(texts.size() == listed.size());
      CHECK(texts == levels[static_cast<std::size_t>(k)]);
      for (std::size_t i = 1; i < listed.size(); ++i) CHECK(S(listed[i - 1]) < S(listed[i]));
    }
  }
}

TEST_CASE("PF_n(1) count is the number of ordered subsets of size >= 2") {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::size_t expected = 0, fact = 1;
    for (std::size_t m = 1; m <= n; ++m) {
      fact *= m;
      if (m >= 2) expected += binomial(n, m) * fact;
    }
    CHECK(enumerate_forests(static_cast<int>(n), 1).size() == expected);
  }
}

TEST_CASE("internal edges") {
  CHECK(internal_edges(F("1,2,3")).empty());
  auto e = internal_edges(F("((1 2) 3)"));
  REQUIRE(e.size() == 2);
  CHECK(leaf_order(F("((1 2) 3)"), e[0]) == OrderedSubset{1, 2, 3});
  CHECK(internal_edges(F("(1 2),(3 4)")).size() == 2);
}

TEST_CASE("flip") {
  PlanarForest f = F("((1 2) 3)");
  auto e = internal_edges(f);
  EdgeId outer = e[0], inner = e[1];
  CHECK(S(flip(f, inner)) == "((2 1) 3)");
  CHECK(S(flip(f, outer)) == "(3 (2 1))");
  CHECK(flip(flip(f, outer), outer) == f);
  CHECK_THROWS_AS(flip(f, EdgeId{42}), ForestError);
  CHECK(edge_type(flip(f, outer), inner) == TypeSet::of({1, 2}));
}

TEST_CASE("delete_edge") {
  PlanarForest f = F("((1 2) 3)");
  auto e = internal_edges(f);
  CHECK(S(delete_edge(f, e[1])) == "(1 2 3)");
  CHECK(S(delete_edge(f, e[0])) == "(1 2),3");
  PlanarForest g = F("(1 2),(3 4)");
  auto ge = internal_edges(g);
  CHECK(S(delete_edge(g, ge[0])) == "1,2,(3 4)");
  CHECK_THROWS_AS(delete_edge(f, EdgeId{7}), ForestError);
}

TEST_CASE("leaf_order and edge_type") {
  PlanarForest f = F("((1 2) 3)");
  auto e = internal_edges(f);
  CHECK(leaf_order(f, e[0]) == OrderedSubset{1, 2, 3});
  CHECK(leaf_order(f, e[1]) == OrderedSubset{1, 2});
  PlanarForest g = F("(3 (2 1))");
  CHECK(leaf_order(g, internal_edges(g)[0]) == OrderedSubset{3, 2, 1});
  CHECK(leaf_order(flip(f, e[0]), e[0]) == OrderedSubset{3, 2, 1});
  CHECK(edge_type(f, e[0]) == TypeSet::of({1, 2, 3}));
  PlanarForest h = F("((2 1) 3)");
  CHECK(edge_type(h, internal_edges(h)[1]) == TypeSet::of({1, 2}));
  CHECK(TypeSet::of({1, 2}).to_string() == "{1,2}");
}

TEST_CASE("insert_edge") {
  PlanarForest f = F("(1 2 3)");
  auto ins = insert_edge(f, NodeRangeSite{0, {}, {0, 1}});
  CHECK(S(ins.forest) == "((1 2) 3)");
  CHECK(leaf_order(ins.forest, ins.edge) == OrderedSubset{1, 2});
  CHECK(delete_edge(ins.forest, ins.edge) == f);

  PlanarForest t = F("1,2,3");
  auto ins2 = insert_edge(t, TreeSetSite{{1, 0}});
  CHECK(S(ins2.forest) == "(2 1),3");
  CHECK(leaf_order(ins2.forest, ins2.edge) == OrderedSubset{2, 1});

  CHECK_THROWS_AS(insert_edge(f, NodeRangeSite{0, {}, {0}}), ForestError);
  CHECK_THROWS_AS(insert_edge(F("(1 2 3 4)"), NodeRangeSite{0, {}, {0, 2}}), ForestError);
  CHECK_THROWS_AS(insert_edge(f, NodeRangeSite{0, {}, {0, 1, 2}}), ForestError);
  CHECK_THROWS_AS(insert_edge(f, NodeRangeSite{0, {}, {2, 3}}), ForestError);
  CHECK_THROWS_AS(insert_edge(t, TreeSetSite{{0}}), ForestError);
  CHECK_THROWS_AS(insert_edge(t, TreeSetSite{{0, 0}}), ForestError);
}

TEST_CASE("insert then delete is the identity on every site") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < n; ++k)
      for (const auto& f : enumerate_forests(n, k))
        for (const auto& site : insertion_sites(f)) {
          auto ins = insert_edge(f, site);
          INFO(S(f));
          CHECK(edge_count(ins.forest) == edge_count(f) + 1);
          CHECK(S(delete_edge(ins.forest, ins.edge)) == S(f));
          for (EdgeId e : internal_edges(f)) CHECK(leaf_order(ins.forest, e) == leaf_order(f, e));
        }
}

TEST_CASE("restrict_to_edge") {
  PlanarForest f = F("((1 2) 3)");
  auto e = internal_edges(f);
  CHECK(S(restrict_to_edge(f, e[1])) == "(1 2),3");
  CHECK(S(restrict_to_edge(f, e[0])) == "(1 2 3)");
  PlanarForest g = F("(2 1),3");
  CHECK(restrict_to_edge(g, internal_edges(g)[0]) == g);
}

TEST_CASE("flip and delete laws on every forest up to n = 4") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::set<std::string>> texts(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      for (const auto& f : enumerate_forests(n, k)) texts[static_cast<std::size_t>(k)].insert(S(f));
    for (int k = 1; k < n; ++k) {
      for (const auto& f : enumerate_forests(n, k)) {
        INFO(S(f));
        auto edges = internal_edges(f);
        for (EdgeId e : edges) {
          CHECK(flip(flip(f, e), e) == f);
          CHECK(leaf_order(flip(f, e), e) == reversed(leaf_order(f, e)));
          CHECK(texts[static_cast<std::size_t>(k)].count(S(flip(f, e))) == 1);
          CHECK(texts[static_cast<std::size_t>(k - 1)].count(S(delete_edge(f, e))) == 1);
          PlanarForest r = restrict_to_edge(f, e);
          CHECK(edge_count(r) == 1);
          CHECK(leaf_order(r, e) == leaf_order(f, e));
          for (EdgeId g : edges) {
            CHECK(edge_type(flip(f, g), e) == edge_type(f, e));
            if (g.value == e.value) continue;
            CHECK(flip(flip(f, e), g) == flip(flip(f, g), e));
            CHECK(delete_edge(flip(f, g), e) == flip(delete_edge(f, e), g));
          }
        }
        // Flip orbit is free: 2^k distinct forests.
        std::set<std::string> orbit;
        for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
          PlanarForest g = f;
          for (std::size_t i = 0; i < edges.size(); ++i)
            if ((mask >> i) & 1u) g = flip(g, edges[i]);
          orbit.insert(S(g));
        }
        CHECK(orbit.size() == (std::size_t{1} << edges.size()));
      }
    }
  }
}

TEST_CASE("serialize and parse round trip") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < n; ++k)
      for (const auto& f : enumerate_forests(n, k)) {
        std::string text = S(f);
        CHECK(S(F(text)) == text);
        CHECK(F(text) == f);
      }
}

TEST_CASE("single_edge_forest") {
  CHECK(S(single_edge_forest(3, {2, 1})) == "(2 1),3");
  CHECK(S(single_edge_forest(4, {3, 1, 2})) == "(3 1 2),4");
  CHECK_THROWS_AS(single_edge_forest(3, {1}), ForestError);
  CHECK_THROWS_AS(single_edge_forest(3, {1, 1}), ForestError);
  CHECK_THROWS_AS(single_edge_forest(3, {1, 4}), ForestError);
}

TEST_CASE("type order and parameters") {
  TypeIndex L(3);
  REQUIRE(L.size() == 4);
  CHECK(L.at(0) == TypeSet::of({1, 2}));
  CHECK(L.at(1) == TypeSet::of({1, 3}));
  CHECK(L.at(2) == TypeSet::of({2, 3}));
  CHECK(L.at(3) == TypeSet::of({1, 2, 3}));
  for (int n = 2; n <= 6; ++n) CHECK(TypeIndex(n).size() == (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1);

  Parameter zero;
  Parameter a = param_add(zero, TypeSet::of({1, 2}), L);
  CHECK(a == Parameter::unit(L, TypeSet::of({1, 2})));
  CHECK(param_add(a, TypeSet::of({1, 2}), L).is_zero());
  Parameter b = param_add(a, TypeSet::of({1, 2, 3}), L);
  CHECK(b == Parameter::unit(L, TypeSet::of({1, 2})) + Parameter::unit(L, TypeSet::of({1, 2, 3})));
  CHECK(b.to_hex(L) == "9");
  CHECK(Parameter::from_hex("9", L) == b);
  CHECK(Parameter{}.to_hex(TypeIndex(4)) == "000");
  CHECK_THROWS(param_add(zero, TypeSet::of({1}), L));
  CHECK_THROWS(param_add(zero, TypeSet::of({1, 4}), L));
}
