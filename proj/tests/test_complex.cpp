#include <catch_amalgamated.hpp>

#include <set>

#include "vcube/complex.hpp"
#include "vcube/cover.hpp"

using namespace vcube;

namespace {

std::set<std::string> pair_texts(const CubeComplex& m, const CornerPair& cp) {
  return {m.label_text(cp.first), m.label_text(cp.second)};
}

bool contains_run(const OrderedSubset& word, const OrderedSubset& run, std::size_t& at) {
  for (std::size_t i = 0; i + run.size() <= word.size(); ++i)
    if (std::equal(run.begin(), run.end(), word.begin() + static_cast<std::ptrdiff_t>(i))) {
      at = i;
      return true;
    }
  return false;
}

// Disjoint: s_A s_B s_{A^r} s_{B^r}. Nested: s_{X} s_{C X^r B} s_{X} s_{(C X B)^r}, B or C nonempty.
bool square_shape(const std::vector<OrderedSubset>& w) {
  if (support(w[0]).disjoint(support(w[1])))
    return w[2] == reversed(w[0]) && w[3] == reversed(w[1]);
  if (w[0] != w[2]) return false;
  std::size_t at = 0;
  OrderedSubset xr = reversed(w[0]);
  if (!contains_run(w[1], xr, at) || w[1].size() == w[0].size()) return false;
  OrderedSubset expect = w[1];
  std::copy(w[0].begin(), w[0].end(), expect.begin() + static_cast<std::ptrdiff_t>(at));
  return w[3] == reversed(expect);
}

bool some_rotation_has_shape(std::vector<OrderedSubset> w) {
  for (int inv = 0; inv < 2; ++inv) {
    for (std::size_t r = 0; r < w.size(); ++r) {
      if (square_shape(w)) return true;
      std::rotate(w.begin(), w.begin() + 1, w.end());
    }
    std::reverse(w.begin(), w.end());
    for (auto& a : w) a = reversed(a);
  }
  return false;
}

}  // namespace

TEST_CASE("base census for n = 3") {
  auto m = CubeComplex::build(3, Space::base);
  CHECK(m.vertex_count() == 1);
  CHECK(m.undirected_edge_count() == 6);
  CHECK(m.oriented_edge_count() == 12);
  CHECK(m.square_count() == 3);
  CHECK(m.subcube_count(2) == 12);
  CHECK(m.max_dim() == 2);
}

TEST_CASE("cover census") {
  auto m3 = CubeComplex::build(3, Space::cover);
  CHECK(m3.vertex_count() == 16);
  auto m2 = CubeComplex::build(2, Space::cover);
  CHECK(m2.vertex_count() == 2);
  CHECK(m2.undirected_edge_count() == 2);
  CHECK(m2.square_count() == 0);
  CHECK_THROWS_AS(CubeComplex::build(5, Space::base), std::out_of_range);
  CHECK_THROWS_AS(CubeComplex::build(1, Space::cover), std::out_of_range);
}

TEST_CASE("space names") {
  CHECK(parse_space("base") == Space::base);
  CHECK(parse_space("cover") == Space::cover);
  CHECK_THROWS(parse_space("sheet"));
  CHECK(to_string(Space::cover) == "cover");
}

TEST_CASE("corner pairs") {
  auto m = CubeComplex::build(3, Space::base);
  auto corners = m.corner_pairs();
  CHECK(corners.size() == 12);
  bool found = false;
  for (const auto& cp : corners) {
    CHECK(cp.first != cp.second);
    CHECK(cp.vertex.is_zero());
    if (m.label_text(cp.subcube) == "((1 2) 3)") {
      found = true;
      CHECK(pair_texts(m, cp) == std::set<std::string>{"(1 2),3", "(1 2 3)"});
    }
  }
  CHECK(found);
  CHECK(CubeComplex::build(2, Space::cover).corner_pairs().empty());
}

TEST_CASE("links") {
  auto m3 = CubeComplex::build(3, Space::base);
  LinkComplex l3 = m3.link_of(Parameter{});
  CHECK(l3.vertices.size() == 12);
  CHECK(l3.simplex_count(2) == 12);
  CHECK(l3.simplex_count(3) == 0);

  auto m2 = CubeComplex::build(2, Space::base);
  LinkComplex l2 = m2.link_of(Parameter{});
  CHECK(l2.vertices.size() == 2);
  CHECK(l2.simplices.empty());

  auto c3 = CubeComplex::build(3, Space::cover);
  for (Parameter v : c3.vertices()) {
    LinkComplex l = c3.link_of(v);
    CHECK(l.simplices == l3.simplices);
    for (std::size_t i = 0; i < l.vertices.size(); ++i) CHECK(covering_image(l.vertices[i]) == l3.vertices[i]);
  }
  CHECK_THROWS(c3.link_of(Parameter(16)));
  CHECK_THROWS(m3.link_of(Parameter(1)));
}

TEST_CASE("npc holds") {
  for (int n = 2; n <= 4; ++n)
    for (Space s : {Space::base, Space::cover}) {
      if (n == 4 && s == Space::cover) continue;  // covered by the acceptance run
      INFO("n=" << n << " " << to_string(s));
      NpcReport r = check_npc(CubeComplex::build(n, s));
      CHECK(r.pass());
      CHECK(r.witness.empty());
    }
}

TEST_CASE("npc detects broken links") {
  auto m = CubeComplex::build(4, Space::base);
  LinkComplex link = m.link_of(Parameter{});
  REQUIRE(link.simplex_count(3) > 0);

  SECTION("missing triangles break the flag condition") {
    LinkComplex hollow = link;
    hollow.simplices.clear();
    hollow.sources.clear();
    for (std::size_t i = 0; i < link.simplices.size(); ++i)
      if (link.simplices[i].size() == 2) {
        hollow.simplices.push_back(link.simplices[i]);
        hollow.sources.push_back(link.sources[i]);
      }
    NpcReport r;
    CHECK_FALSE(check_link(m, hollow, r));
    CHECK_FALSE(r.flag);
    CHECK(r.simplicial);
    CHECK(r.witness.find("clique") != std::string::npos);
  }
  SECTION("a doubled simplex is not simplicial") {
    LinkComplex doubled = link;
    doubled.simplices.push_back(link.simplices.front());
    doubled.sources.push_back(link.sources.back());
    NpcReport r;
    CHECK_FALSE(check_link(m, doubled, r));
    CHECK_FALSE(r.simplicial);
  }
  SECTION("a repeated vertex is not simplicial") {
    LinkComplex loop = link;
    loop.simplices.push_back({0, 0});
    loop.sources.push_back(link.sources.front());
    NpcReport r;
    CHECK_FALSE(check_link(m, loop, r));
    CHECK_FALSE(r.simplicial);
  }
  SECTION("a triangle without its edges is not closed") {
    LinkComplex open = link;
    for (std::size_t i = 0; i < open.simplices.size(); ++i)
      if (open.simplices[i].size() == 2) {
        open.simplices.erase(open.simplices.begin() + static_cast<std::ptrdiff_t>(i));
        open.sources.erase(open.sources.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
    NpcReport r;
    CHECK_FALSE(check_link(m, open, r));
    CHECK_FALSE(r.simplicial);
  }
}

TEST_CASE("cube orbits are free and faces match delete_edge") {
  for (int n = 2; n <= 4; ++n)
    for (Space s : {Space::base, Space::cover}) {
      if (n == 4 && s == Space::cover) continue;
      auto m = CubeComplex::build(n, s);
      for (int k = 0; k <= m.max_dim(); ++k) {
        std::set<std::uint32_t> seen;
        for (std::size_t c = 0; c < m.cube_count(k); ++c) {
          auto members = m.cube_members(k, c);
          CHECK(members.size() == (std::size_t{1} << k));
          std::set<std::uint32_t> orbit(members.begin(), members.end());
          CHECK(orbit.size() == members.size());
          for (std::uint32_t id : members) {
            CHECK(seen.insert(id).second);
            CHECK(m.cube_of(k, id) == c);
          }
        }
        CHECK(seen.size() == m.subcube_count(k));
      }
      for (int k = 1; k <= m.max_dim(); ++k)
        for (std::uint32_t id = 0; id < m.subcube_count(k); ++id) {
          SubcubeLabel c = m.subcube(k, id);
          const auto& en = m.entry(c);
          for (std::size_t i = 0; i < en.edges.size(); ++i) {
            SubcubeLabel f = m.face(c, i);
            CHECK(m.entry(f).text == serialize_forest(delete_edge(en.forest, en.edges[i])));
            CHECK(f.param == c.param);
            SubcubeLabel r = m.flip(c, i);
            CHECK(m.entry(r).text == serialize_forest(flip(en.forest, en.edges[i])));
            CHECK(r.param == c.param + m.shift(en.types[i]));
            CHECK(m.flip(r, m.entry(r).edge_index(en.types[i])) == c);
          }
        }
    }
}

TEST_CASE("oriented edge endpoints and reverse") {
  for (int n = 2; n <= 4; ++n)
    for (Space s : {Space::base, Space::cover}) {
      if (n == 4 && s == Space::cover) continue;
      auto m = CubeComplex::build(n, s);
      for (std::uint32_t id = 0; id < m.oriented_edge_count(); ++id) {
        OrientedEdge e = m.oriented_edge(id);
        CHECK(m.edge_id(e) == id);
        OrientedEdge r = m.reverse(e);
        CHECK(m.terminal(e) == m.initial(e) + m.shift(m.edge_type(e)));
        CHECK(m.reverse(r) == e);
        CHECK(r != e);
        CHECK(m.initial(r) == m.terminal(e));
        CHECK(m.edge_order(r) == reversed(m.edge_order(e)));
        if (s == Space::base) CHECK(m.initial(r) == m.initial(e));
        else CHECK(m.initial(r) != m.initial(e));
      }
    }
}

TEST_CASE("every square has a disjoint or nested boundary") {
  for (int n = 3; n <= 4; ++n) {
    auto m = CubeComplex::build(n, Space::base);
    std::size_t disjoint = 0, nested = 0;
    for (std::size_t c = 0; c < m.square_count(); ++c) {
      SubcubeLabel sigma = m.subcube(2, m.cube_members(2, c)[0]);
      auto boundary = square_boundary(m, sigma);
      REQUIRE(boundary.size() == 4);
      for (std::size_t i = 0; i < 4; ++i) CHECK(m.terminal(boundary[i]) == m.initial(boundary[(i + 1) % 4]));
      GeneratorWord w = boundary_word(m, boundary);
      INFO(word_text(w));
      CHECK(some_rotation_has_shape(w));
      auto t = m.entry(sigma).types;
      (t[0].disjoint(t[1]) ? disjoint : nested)++;
    }
    if (n == 3) {
      CHECK(disjoint == 0);
      CHECK(nested == 3);
    } else {
      CHECK(disjoint + nested == 45);
      CHECK(disjoint > 0);
    }
  }
}

TEST_CASE("forest catalog") {
  ForestCatalog cat(3);
  CHECK(cat.size() == 25);
  CHECK(cat.of_dim(0).size() == 1);
  CHECK(cat.of_dim(1).size() == 12);
  CHECK(cat.of_dim(2).size() == 12);
  CHECK(cat[cat.find(std::string("((1 2) 3)"))].dim == 2);
  CHECK_FALSE(cat.try_find("((1 2) 4)").has_value());
  CHECK_THROWS(cat.find(std::string("nope")));
}
