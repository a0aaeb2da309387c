#pragma once

// Hyperplanes as classes of 1-cubes under "opposite sides of a square",
// reflections of oriented edges about midcubes, and the four hyperplane
// pathologies that define specialness.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <variant>
#include <vector>

#include "vcube/complex.hpp"
#include "vcube/forest.hpp"
#include "vcube/types.hpp"
#include "vcube/union_find.hpp"

namespace vcube {

/// Hyperplane of every oriented edge (an edge and its reverse share one).
struct HyperplanePartition {
  std::vector<std::uint32_t> of_edge;         // oriented edge id -> hyperplane
  std::vector<std::uint32_t> representative;  // hyperplane -> smallest oriented edge id
  std::vector<TypeSet> type;                  // hyperplane -> base type of its edges
  bool types_consistent = true;               // every class carries a single type

  std::size_t count() const { return representative.size(); }
  std::uint32_t of(const CubeComplex& model, const OrientedEdge& e) const { return of_edge.at(model.edge_id(e)); }
};

/// Same-direction translation classes of oriented edges.
struct OrientedClassPartition {
  std::vector<std::uint32_t> of_edge;
  std::uint32_t of(const CubeComplex& model, const OrientedEdge& e) const { return of_edge.at(model.edge_id(e)); }
};

namespace detail {

/// Calls f(h, opposite) for each outward face h of each 2-subcube, where
/// `opposite` is the parallel edge on the far side of the square, oriented the same way.
template <typename F>
void for_each_opposite_pair(const CubeComplex& model, F&& f) {
  if (model.max_dim() < 2) return;
  for (std::uint32_t id = 0; id < model.subcube_count(2); ++id) {
    SubcubeLabel c = model.subcube(2, id);
    const auto& types = model.entry(c).types;
    for (std::size_t i = 0; i < 2; ++i) {
      OrientedEdge h = model.face(c, i);
      OrientedEdge opposite = model.face_type(model.flip(c, i), types[i]);
      f(h, opposite);
    }
  }
}

}  // namespace detail

inline HyperplanePartition compute_hyperplanes(const CubeComplex& model) {
  std::size_t m = model.oriented_edge_count();
  UnionFind uf(m);
  for (std::uint32_t id = 0; id < m; ++id) uf.unite(id, model.edge_id(model.reverse(model.oriented_edge(id))));
  detail::for_each_opposite_pair(model, [&](const OrientedEdge& a, const OrientedEdge& b) {
    uf.unite(model.edge_id(a), model.edge_id(b));
  });
  HyperplanePartition out;
  out.of_edge = uf.labels();
  for (std::uint32_t id = 0; id < m; ++id) {
    std::uint32_t h = out.of_edge[id];
    TypeSet t = model.edge_type(model.oriented_edge(id));
    if (h == out.representative.size()) {
      out.representative.push_back(id);
      out.type.push_back(t);
    } else if (out.type[h] != t) {
      out.types_consistent = false;
    }
  }
  return out;
}

inline OrientedClassPartition compute_oriented_classes(const CubeComplex& model) {
  UnionFind uf(model.oriented_edge_count());
  detail::for_each_opposite_pair(model, [&](const OrientedEdge& a, const OrientedEdge& b) {
    uf.unite(model.edge_id(a), model.edge_id(b));
  });
  return OrientedClassPartition{uf.labels()};
}

struct TypeLemmaResult {
  bool holds = true;
  std::size_t hyperplanes = 0;
  std::size_t types = 0;
  std::optional<std::pair<OrientedEdge, OrientedEdge>> witness;
};

/// Base space only: two oriented edges share a type iff they share a hyperplane.
inline TypeLemmaResult verify_type_lemma(const CubeComplex& model, const HyperplanePartition& hp) {
  if (model.space() != Space::base) throw std::invalid_argument("the type lemma is checked on the base space");
  TypeLemmaResult r;
  r.hyperplanes = hp.count();
  std::map<TypeSet, std::uint32_t> first_edge_of_type;
  for (std::uint32_t id = 0; id < hp.of_edge.size(); ++id) {
    TypeSet t = model.edge_type(model.oriented_edge(id));
    auto [it, fresh] = first_edge_of_type.emplace(t, id);
    if (!fresh && hp.of_edge[it->second] != hp.of_edge[id] && !r.witness) {
      r.holds = false;
      r.witness = std::pair{model.oriented_edge(it->second), model.oriented_edge(id)};
    }
  }
  r.types = first_edge_of_type.size();
  for (std::uint32_t id = 0; id < hp.of_edge.size() && !r.witness; ++id) {
    std::uint32_t rep = hp.representative[hp.of_edge[id]];
    if (model.edge_type(model.oriented_edge(rep)) != model.edge_type(model.oriented_edge(id))) {
      r.holds = false;
      r.witness = std::pair{model.oriented_edge(rep), model.oriented_edge(id)};
    }
  }
  return r;
}

inline TypeLemmaResult verify_type_lemma(const CubeComplex& model) {
  return verify_type_lemma(model, compute_hyperplanes(model));
}

/// Reverses, in place, the run of `o` occupied by the labels of l.
/// Requires l and set(o) nested or disjoint, with l ∩ set(o) contiguous in o.
inline OrderedSubset reflect_order(OrderedSubset o, TypeSet l) {
  TypeSet a = support(o);
  if (strongly_invalid(a, l)) throw std::invalid_argument("types " + a.to_string() + " and " + l.to_string() + " are neither nested nor disjoint");
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < o.size(); ++i)
    if (l.contains(o[i])) hits.push_back(i);
  if (hits.empty()) return o;
  if (hits.back() - hits.front() + 1 != hits.size())
    throw std::invalid_argument(l.to_string() + " is not a contiguous run of " + to_string(o));
  std::reverse(o.begin() + static_cast<std::ptrdiff_t>(hits.front()), o.begin() + static_cast<std::ptrdiff_t>(hits.back()) + 1);
  return o;
}

/// A midcube: the one in `square` (any subcube of the 2-cube) transverse to the edge of type `type`.
struct Midcube {
  SubcubeLabel square;
  TypeSet type;
};

struct StronglyInvalid {
  friend bool operator==(const StronglyInvalid&, const StronglyInvalid&) = default;
};
struct Invalid {
  friend bool operator==(const Invalid&, const Invalid&) = default;
};
struct Valid {
  Midcube witness;
};
using ReflectionClass = std::variant<StronglyInvalid, Invalid, Valid>;

namespace detail {

/// Insertion site in a single-edge forest producing a new edge with leaf set l.
inline std::optional<InsertionSite> reflection_site(const PlanarForest& tau, TypeSet l) {
  const auto& trees = tau.trees();
  std::size_t edge_tree = trees.size();
  for (std::size_t i = 0; i < trees.size(); ++i)
    if (!trees[i].top.is_leaf()) edge_tree = i;
  const OrderedSubset order = trees.at(edge_tree).top.leaves();
  TypeSet a = support(order);
  if (l.subset_of(a)) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (l.contains(order[i])) hits.push_back(i);
    if (hits.back() - hits.front() + 1 != hits.size()) return std::nullopt;
    return InsertionSite{NodeRangeSite{edge_tree, {}, hits}};
  }
  // l is disjoint from or contains a: gather whole trees, ascending by min label.
  std::vector<std::size_t> sel;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    TypeSet leaves = support(trees[i].top.leaves());
    if (leaves.subset_of(l)) sel.push_back(i);
    else if (!leaves.disjoint(l)) return std::nullopt;
  }
  return InsertionSite{TreeSetSite{sel}};
}

}  // namespace detail

/// How a midcube of type l can act on `edge`.
inline ReflectionClass classify_reflection(const CubeComplex& model, const OrientedEdge& edge, TypeSet l) {
  TypeSet a = model.edge_type(edge);
  if (strongly_invalid(a, l)) return StronglyInvalid{};
  if (!model.types().contains(l)) return Invalid{};
  const PlanarForest& tau = model.forest(edge);
  std::optional<InsertionSite> site;
  if (l == a) {
    // The dual midcube of any square containing the edge.
    auto sites = insertion_sites(tau);
    if (!sites.empty()) site = sites.front();
  } else {
    site = detail::reflection_site(tau, l);
  }
  if (!site) return Invalid{};
  Insertion ins = insert_edge(tau, *site);
  auto square = model.find(ins.forest, edge.param);
  if (!square) return Invalid{};
  return Valid{Midcube{*square, l}};
}

/// Z · edge for the midcube z of a square containing the edge: the reverse
/// edge when z is dual to it, otherwise the parallel edge on the far side.
inline OrientedEdge reflect_edge(const CubeComplex& model, const OrientedEdge& edge, const Midcube& z) {
  if (model.dim(z.square) != 2) throw std::invalid_argument("midcube must name a 2-subcube");
  const auto& square_types = model.entry(z.square).types;
  if (std::find(square_types.begin(), square_types.end(), z.type) == square_types.end())
    throw std::invalid_argument("square " + model.label_text(z.square) + " has no midcube of type " + z.type.to_string());
  std::uint32_t cube = model.cube_of(2, model.subcube_id(z.square));
  for (std::uint32_t member : model.cube_members(2, cube)) {
    SubcubeLabel c = model.subcube(2, member);
    const auto& types = model.entry(c).types;
    for (std::size_t i = 0; i < 2; ++i) {
      if (model.face(c, i) != edge) continue;
      return model.face_type(model.flip_type(c, z.type), types[i]);
    }
  }
  throw std::invalid_argument("edge " + model.label_text(edge) + " is not on the boundary of square " + model.label_text(z.square));
}

struct TwoSidedResult {
  bool two_sided = true;
  std::optional<OrientedEdge> witness;  // an edge translated onto its own reverse
};

inline TwoSidedResult check_two_sided(const CubeComplex& model, const HyperplanePartition& hp,
                                      const OrientedClassPartition& oc, std::uint32_t h) {
  if (h >= hp.count()) throw std::out_of_range("unknown hyperplane");
  for (std::uint32_t id = 0; id < hp.of_edge.size(); ++id) {
    if (hp.of_edge[id] != h) continue;
    OrientedEdge e = model.oriented_edge(id);
    if (oc.of_edge[id] == oc.of(model, model.reverse(e))) return TwoSidedResult{false, e};
  }
  return {};
}

struct HyperplaneFlags {
  std::uint32_t id = 0;
  TypeSet type;
  std::size_t edges = 0;  // undirected dual 1-cubes
  bool two_sided = true;
  bool self_intersects = false;
  bool self_osculates = false;
};

struct PairFlags {
  std::uint32_t h1 = 0;
  std::uint32_t h2 = 0;
  bool intersect = false;
  bool osculate = false;
  bool inter_osculate() const { return intersect && osculate; }
};

struct Witness {
  std::string kind;  // two_sided | self_intersect | self_osculate | inter_osculate
  std::uint32_t h1 = 0;
  std::uint32_t h2 = 0;
  std::string vertex;
  std::vector<std::string> edges;
  std::string square;
};

struct SpecialnessReport {
  Space space = Space::base;
  int n = 0;
  std::vector<HyperplaneFlags> hyperplanes;
  std::vector<PairFlags> pairs;  // h1 < h2, only pairs that intersect or osculate
  std::vector<Witness> witnesses;
  std::size_t same_type_intersections = 0;  // intersecting pairs with equal base type

  bool all_two_sided() const {
    return std::all_of(hyperplanes.begin(), hyperplanes.end(), [](const auto& h) { return h.two_sided; });
  }
  bool no_self_intersection() const {
    return std::none_of(hyperplanes.begin(), hyperplanes.end(), [](const auto& h) { return h.self_intersects; });
  }
  bool no_self_osculation() const {
    return std::none_of(hyperplanes.begin(), hyperplanes.end(), [](const auto& h) { return h.self_osculates; });
  }
  bool no_inter_osculation() const {
    return std::none_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.inter_osculate(); });
  }
  bool pass() const { return all_two_sided() && no_self_intersection() && no_self_osculation() && no_inter_osculation(); }
};

namespace detail {

inline std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

}  // namespace detail

/// The four pathology checks. Corners come from 2-subcube outward corners;
/// any other pair of distinct oriented edges leaving one vertex osculates.
inline SpecialnessReport specialness_report(const CubeComplex& model, const HyperplanePartition& hp,
                                            const OrientedClassPartition& oc) {
  SpecialnessReport rep;
  rep.space = model.space();
  rep.n = model.n();
  rep.hyperplanes.resize(hp.count());
  for (std::uint32_t h = 0; h < hp.count(); ++h) {
    rep.hyperplanes[h].id = h;
    rep.hyperplanes[h].type = hp.type[h];
  }
  for (std::uint32_t id = 0; id < hp.of_edge.size(); ++id) ++rep.hyperplanes[hp.of_edge[id]].edges;
  for (auto& h : rep.hyperplanes) h.edges /= 2;

  auto edge_text = [&](std::uint32_t id) { return model.label_text(model.oriented_edge(id)); };

  // Two-sidedness.
  for (std::uint32_t id = 0; id < hp.of_edge.size(); ++id) {
    auto& flags = rep.hyperplanes[hp.of_edge[id]];
    if (!flags.two_sided) continue;
    std::uint32_t rev = model.edge_id(model.reverse(model.oriented_edge(id)));
    if (oc.of_edge[id] == oc.of_edge[rev]) {
      flags.two_sided = false;
      rep.witnesses.push_back(Witness{"two_sided", flags.id, flags.id, model.oriented_edge(id).param.to_hex(model.types()),
                                      {edge_text(id), edge_text(rev)}, {}});
    }
  }

  std::unordered_set<std::uint64_t> corners;
  std::map<std::uint64_t, PairFlags> pairs;
  auto pair_at = [&](std::uint32_t h1, std::uint32_t h2) -> PairFlags& {
    auto [it, fresh] = pairs.try_emplace(detail::pair_key(h1, h2));
    if (fresh) {
      it->second.h1 = std::min(h1, h2);
      it->second.h2 = std::max(h1, h2);
    }
    return it->second;
  };

  for (const CornerPair& cp : model.corner_pairs()) {
    std::uint32_t a = model.edge_id(cp.first), b = model.edge_id(cp.second);
    corners.insert(detail::pair_key(a, b));
    std::uint32_t ha = hp.of_edge[a], hb = hp.of_edge[b];
    if (ha == hb) {
      auto& flags = rep.hyperplanes[ha];
      if (!flags.self_intersects)
        rep.witnesses.push_back(Witness{"self_intersect", ha, ha, cp.vertex.to_hex(model.types()),
                                        {edge_text(a), edge_text(b)}, model.label_text(cp.subcube)});
      flags.self_intersects = true;
    } else {
      pair_at(ha, hb).intersect = true;
      if (hp.type[ha] == hp.type[hb]) ++rep.same_type_intersections;
    }
  }

  const auto& edges_1 = model.catalog().of_dim(1);
  std::map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> first_osculation;
  // Self-osculation witness per hyperplane; an edge paired with its own reverse is preferred.
  std::map<std::uint32_t, std::tuple<bool, Parameter, std::uint32_t, std::uint32_t>> self_witness;
  for (Parameter v : model.vertices()) {
    for (std::size_t i = 0; i < edges_1.size(); ++i) {
      std::uint32_t a = model.edge_id(OrientedEdge{edges_1[i], v});
      for (std::size_t j = i + 1; j < edges_1.size(); ++j) {
        std::uint32_t b = model.edge_id(OrientedEdge{edges_1[j], v});
        if (corners.count(detail::pair_key(a, b))) continue;
        std::uint32_t ha = hp.of_edge[a], hb = hp.of_edge[b];
        if (ha == hb) {
          rep.hyperplanes[ha].self_osculates = true;
          bool is_reverse = model.edge_id(model.reverse(model.oriented_edge(a))) == b;
          auto [it, fresh] = self_witness.try_emplace(ha, is_reverse, v, a, b);
          if (!fresh && is_reverse && !std::get<0>(it->second)) it->second = {true, v, a, b};
        } else {
          pair_at(ha, hb).osculate = true;
          first_osculation.try_emplace(detail::pair_key(ha, hb), a, b);
        }
      }
    }
  }

  for (const auto& [h, w] : self_witness) {
    const auto& [is_reverse, v, a, b] = w;
    rep.witnesses.push_back(Witness{"self_osculate", h, h, v.to_hex(model.types()), {edge_text(a), edge_text(b)}, {}});
  }

  for (auto& [key, p] : pairs) {
    rep.pairs.push_back(p);
    if (p.inter_osculate()) {
      auto [a, b] = first_osculation.at(key);
      rep.witnesses.push_back(Witness{"inter_osculate", p.h1, p.h2, model.oriented_edge(a).param.to_hex(model.types()),
                                      {edge_text(a), edge_text(b)}, {}});
    }
  }
  return rep;
}

inline SpecialnessReport specialness_report(const CubeComplex& model) {
  return specialness_report(model, compute_hyperplanes(model), compute_oriented_classes(model));
}

}  // namespace vcube
