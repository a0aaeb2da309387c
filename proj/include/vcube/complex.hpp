#pragma once

// The one-vertex complex D̂_n ("base") and its (Z/2Z)^L cover M_n ("cover"),
// assembled from subcubes labelled (forest, parameter).
//
// A k-subcube (σ, s) has its outward corner at vertex s. Its outward face
// across edge e is the (k-1)-subcube (d_e σ, s); its inward face across e is
// glued to (r_e σ, s + 1_e). A k-cube is the flip orbit of a subcube, 2^k
// subcubes in all. In the base space every parameter is zero.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vcube/forest.hpp"
#include "vcube/types.hpp"

namespace vcube {

enum class Space { base, cover };

inline std::string_view to_string(Space s) { return s == Space::base ? "base" : "cover"; }

inline Space parse_space(std::string_view text) {
  if (text == "base") return Space::base;
  if (text == "cover") return Space::cover;
  throw std::invalid_argument("unknown space: " + std::string(text));
}

inline constexpr int kMinBuildN = 2;
inline constexpr int kMaxBuildN = 4;

/// Every canonical forest on [n] with its flip / delete / restrict tables.
/// Global order: by number of internal edges, then by canonical text.
class ForestCatalog {
 public:
  struct Entry {
    PlanarForest forest;  // canonical, edge ids renumbered depth-first
    std::string text;
    int dim = 0;
    std::size_t local = 0;  // position among forests of the same dim
    std::vector<EdgeId> edges;
    std::vector<TypeSet> types;
    std::vector<std::size_t> flip_to;
    std::vector<std::size_t> delete_to;
    std::vector<std::size_t> restrict_to;

    std::size_t edge_index(TypeSet t) const {
      for (std::size_t i = 0; i < types.size(); ++i)
        if (types[i] == t) return i;
      throw std::invalid_argument("forest " + text + " has no edge of type " + t.to_string());
    }
  };

  explicit ForestCatalog(int n) : n_(n) {
    for (int k = 0; k < n; ++k) {
      by_dim_.emplace_back();
      for (auto& f : enumerate_forests(n, k)) {
        Entry e;
        e.text = serialize_forest(f);
        e.forest = std::move(f);
        e.dim = k;
        e.local = by_dim_.back().size();
        e.edges = internal_edges(e.forest);
        for (EdgeId id : e.edges) e.types.push_back(edge_type(e.forest, id));
        index_.emplace(e.text, entries_.size());
        by_dim_.back().push_back(entries_.size());
        entries_.push_back(std::move(e));
      }
    }
    for (auto& e : entries_) {
      for (EdgeId id : e.edges) {
        e.flip_to.push_back(find(flip(e.forest, id)));
        e.delete_to.push_back(find(delete_edge(e.forest, id)));
        e.restrict_to.push_back(find(restrict_to_edge(e.forest, id)));
      }
    }
  }

  int n() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<std::size_t>& of_dim(int k) const { return by_dim_.at(static_cast<std::size_t>(k)); }
  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }

  std::size_t find(const PlanarForest& f) const { return find(serialize_forest(f)); }

  std::size_t find(const std::string& canonical_text) const {
    auto it = index_.find(canonical_text);
    if (it == index_.end()) throw std::invalid_argument("forest not in catalog: " + canonical_text);
    return it->second;
  }

  std::optional<std::size_t> try_find(const std::string& canonical_text) const {
    auto it = index_.find(canonical_text);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  int n_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> by_dim_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// (forest, parameter); `forest` is a catalog index.
struct SubcubeLabel {
  std::size_t forest = 0;
  Parameter param;
  friend bool operator==(const SubcubeLabel&, const SubcubeLabel&) = default;
  friend auto operator<=>(const SubcubeLabel&, const SubcubeLabel&) = default;
};

/// A 1-subcube read as the oriented 1-cube whose initial half it is.
using OrientedEdge = SubcubeLabel;

struct CornerPair {
  Parameter vertex;
  OrientedEdge first;
  OrientedEdge second;
  SubcubeLabel subcube;
};

/// Link of a vertex. Link vertex i is the oriented edge (PF_n(1)[i], vertex);
/// each subcube of dimension >= 2 with its outward corner at the vertex
/// contributes the simplex of its emanating edges.
struct LinkComplex {
  Parameter vertex;
  std::vector<OrientedEdge> vertices;
  std::vector<std::vector<std::uint32_t>> simplices;  // members as produced, one per subcube
  std::vector<SubcubeLabel> sources;

  std::size_t simplex_count(std::size_t members) const {
    return static_cast<std::size_t>(
        std::count_if(simplices.begin(), simplices.end(), [&](const auto& s) { return s.size() == members; }));
  }
};

struct NpcReport {
  bool simplicial = true;
  bool flag = true;
  std::size_t vertices_checked = 0;
  std::optional<Parameter> witness_vertex;
  std::string witness;
  bool pass() const { return simplicial && flag; }
};

class CubeComplex {
 public:
  static CubeComplex build(int n, Space space) {
    if (n < kMinBuildN || n > kMaxBuildN)
      throw std::out_of_range("build supports n in " + std::to_string(kMinBuildN) + ".." + std::to_string(kMaxBuildN));
    return CubeComplex(n, space);
  }

  int n() const { return n_; }
  Space space() const { return space_; }
  const TypeIndex& types() const { return types_; }
  const ForestCatalog& catalog() const { return catalog_; }
  int max_dim() const { return catalog_.max_dim(); }

  /// 1_t in the cover; zero in the base space.
  Parameter shift(TypeSet t) const { return space_ == Space::cover ? Parameter::unit(types_, t) : Parameter{}; }

  std::uint64_t vertex_count() const { return sheets_; }
  bool has_vertex(Parameter p) const { return p.bits() < sheets_; }
  std::vector<Parameter> vertices() const {
    std::vector<Parameter> out;
    out.reserve(sheets_);
    for (std::uint64_t s = 0; s < sheets_; ++s) out.emplace_back(s);
    return out;
  }

  const ForestCatalog::Entry& entry(const SubcubeLabel& c) const { return catalog_[c.forest]; }
  const PlanarForest& forest(const SubcubeLabel& c) const { return catalog_[c.forest].forest; }
  int dim(const SubcubeLabel& c) const { return catalog_[c.forest].dim; }

  std::string label_text(const SubcubeLabel& c) const {
    return space_ == Space::base ? catalog_[c.forest].text : catalog_[c.forest].text + "@" + c.param.to_hex(types_);
  }

  // Subcubes of dimension k are numbered local_forest * sheets + param.
  std::size_t subcube_count(int k) const { return catalog_.of_dim(k).size() * sheets_; }

  std::uint32_t subcube_id(const SubcubeLabel& c) const {
    return static_cast<std::uint32_t>(catalog_[c.forest].local * sheets_ + c.param.bits());
  }

  SubcubeLabel subcube(int k, std::uint32_t id) const {
    return SubcubeLabel{catalog_.of_dim(k)[id / sheets_], Parameter(id % sheets_)};
  }

  std::optional<SubcubeLabel> find(const PlanarForest& f, Parameter p) const {
    if (!has_vertex(p)) return std::nullopt;
    auto idx = catalog_.try_find(serialize_forest(f));
    if (!idx) return std::nullopt;
    return SubcubeLabel{*idx, p};
  }

  /// Inward neighbour across edge i: (r_e σ, s + 1_e).
  SubcubeLabel flip(const SubcubeLabel& c, std::size_t i) const {
    const auto& e = catalog_[c.forest];
    return SubcubeLabel{e.flip_to.at(i), c.param + shift(e.types[i])};
  }

  /// Flip across the edge of type t.
  SubcubeLabel flip_type(const SubcubeLabel& c, TypeSet t) const { return flip(c, catalog_[c.forest].edge_index(t)); }

  /// Outward face across edge i: (d_e σ, s).
  SubcubeLabel face(const SubcubeLabel& c, std::size_t i) const {
    return SubcubeLabel{catalog_[c.forest].delete_to.at(i), c.param};
  }

  SubcubeLabel face_type(const SubcubeLabel& c, TypeSet t) const { return face(c, catalog_[c.forest].edge_index(t)); }

  /// Oriented edge leaving the outward corner of c along edge i.
  OrientedEdge corner_edge(const SubcubeLabel& c, std::size_t i) const {
    return OrientedEdge{catalog_[c.forest].restrict_to.at(i), c.param};
  }

  std::size_t cube_count(int k) const { return cube_members_.at(static_cast<std::size_t>(k)).size() >> k; }

  /// Members of cube `cube`: entry j is the representative flipped across the
  /// representative's edges selected by the bits of j.
  std::span<const std::uint32_t> cube_members(int k, std::size_t cube) const {
    const auto& all = cube_members_.at(static_cast<std::size_t>(k));
    std::size_t width = std::size_t{1} << k;
    return std::span<const std::uint32_t>(all).subspan(cube * width, width);
  }

  std::uint32_t cube_of(int k, std::uint32_t subcube) const { return cube_of_.at(static_cast<std::size_t>(k)).at(subcube); }

  // ---- 1-cubes

  std::size_t oriented_edge_count() const { return subcube_count(1); }
  std::size_t undirected_edge_count() const { return cube_count(1); }
  std::size_t square_count() const { return max_dim() >= 2 ? cube_count(2) : 0; }

  OrientedEdge oriented_edge(std::uint32_t id) const { return subcube(1, id); }
  std::uint32_t edge_id(const OrientedEdge& e) const { return subcube_id(e); }

  TypeSet edge_type(const OrientedEdge& e) const { return catalog_[e.forest].types.at(0); }
  OrderedSubset edge_order(const OrientedEdge& e) const {
    const auto& en = catalog_[e.forest];
    return leaf_order(en.forest, en.edges.at(0));
  }
  Parameter initial(const OrientedEdge& e) const { return e.param; }
  Parameter terminal(const OrientedEdge& e) const { return e.param + shift(edge_type(e)); }
  OrientedEdge reverse(const OrientedEdge& e) const { return flip(e, 0); }

  /// One entry per 2-subcube: the two edges leaving its outward corner.
  std::vector<CornerPair> corner_pairs() const {
    std::vector<CornerPair> out;
    if (max_dim() < 2) return out;
    out.reserve(subcube_count(2));
    for (std::uint32_t id = 0; id < subcube_count(2); ++id) {
      SubcubeLabel c = subcube(2, id);
      out.push_back(CornerPair{c.param, corner_edge(c, 0), corner_edge(c, 1), c});
    }
    return out;
  }

  LinkComplex link_of(Parameter v) const {
    if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + v.to_hex(types_));
    LinkComplex link;
    link.vertex = v;
    for (std::size_t f : catalog_.of_dim(1)) link.vertices.push_back(OrientedEdge{f, v});
    for (int k = 2; k <= max_dim(); ++k) {
      for (std::size_t f : catalog_.of_dim(k)) {
        SubcubeLabel c{f, v};
        std::vector<std::uint32_t> simplex;
        for (std::size_t i = 0; i < catalog_[f].edges.size(); ++i)
          simplex.push_back(static_cast<std::uint32_t>(catalog_[catalog_[f].restrict_to[i]].local));
        link.simplices.push_back(std::move(simplex));
        link.sources.push_back(c);
      }
    }
    return link;
  }

 private:
  CubeComplex(int n, Space space)
      : n_(n), space_(space), types_(n), catalog_(n), sheets_(space == Space::cover ? std::uint64_t{1} << types_.size() : 1) {
    if (space == Space::cover) Parameter::check_width(types_);
    for (int k = 0; k <= catalog_.max_dim(); ++k) build_cubes(k);
  }

  void build_cubes(int k) {
    std::size_t count = subcube_count(k);
    std::vector<std::uint32_t> owner(count, UINT32_MAX);
    std::vector<std::uint32_t> members;
    members.reserve(count);
    std::size_t width = std::size_t{1} << k;
    std::uint32_t next = 0;
    for (std::uint32_t id = 0; id < count; ++id) {
      if (owner[id] != UINT32_MAX) continue;
      SubcubeLabel rep = subcube(k, id);
      const auto& types = catalog_[rep.forest].types;
      for (std::size_t bits = 0; bits < width; ++bits) {
        SubcubeLabel c = rep;
        for (std::size_t i = 0; i < types.size(); ++i)
          if ((bits >> i) & 1u) c = flip_type(c, types[i]);
        std::uint32_t cid = subcube_id(c);
        if (owner[cid] != UINT32_MAX) throw std::logic_error("flip orbit is not free at " + label_text(c));
        owner[cid] = next;
        members.push_back(cid);
      }
      ++next;
    }
    cube_of_.push_back(std::move(owner));
    cube_members_.push_back(std::move(members));
  }

  int n_;
  Space space_;
  TypeIndex types_;
  ForestCatalog catalog_;
  std::uint64_t sheets_;
  std::vector<std::vector<std::uint32_t>> cube_of_;
  std::vector<std::vector<std::uint32_t>> cube_members_;
};

namespace detail {

// Bron–Kerbosch with pivoting over a small adjacency matrix.
inline void maximal_cliques(const std::vector<std::vector<bool>>& adj, std::vector<std::uint32_t>& r,
                            std::vector<std::uint32_t> p, std::vector<std::uint32_t> x,
                            const std::function<bool(const std::vector<std::uint32_t>&)>& visit, bool& stop) {
  if (stop) return;
  if (p.empty() && x.empty()) {
    if (!visit(r)) stop = true;
    return;
  }
  std::uint32_t pivot = !p.empty() ? p.front() : x.front();
  std::size_t best = 0;
  for (const auto* pool : {&p, &x})
    for (std::uint32_t u : *pool) {
      std::size_t deg = static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [&](std::uint32_t w) { return adj[u][w]; }));
      if (deg >= best) {
        best = deg;
        pivot = u;
      }
    }
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t v : p)
    if (!adj[pivot][v]) candidates.push_back(v);
  for (std::uint32_t v : candidates) {
    std::vector<std::uint32_t> np, nx;
    for (std::uint32_t w : p)
      if (adj[v][w]) np.push_back(w);
    for (std::uint32_t w : x)
      if (adj[v][w]) nx.push_back(w);
    r.push_back(v);
    maximal_cliques(adj, r, std::move(np), std::move(nx), visit, stop);
    r.pop_back();
    if (stop) return;
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace detail

/// Simplicial and flag checks on one link; fills the report's witness on failure.
inline bool check_link(const CubeComplex& model, const LinkComplex& link, NpcReport& report) {
  auto name = [&](std::uint32_t i) { return model.label_text(link.vertices[i]); };
  auto describe = [&](const std::vector<std::uint32_t>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "; " : "") + name(s[i]);
    return out + "}";
  };
  auto fail = [&](bool NpcReport::*which, std::string what) {
    report.*which = false;
    report.witness_vertex = link.vertex;
    report.witness = "vertex " + link.vertex.to_hex(model.types()) + ": " + std::move(what);
    return false;
  };

  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  for (std::size_t i = 0; i < link.simplices.size(); ++i) {
    std::vector<std::uint32_t> s = link.simplices[i];
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      return fail(&NpcReport::simplicial, "corner of " + model.label_text(link.sources[i]) + " repeats a link vertex");
    auto [it, fresh] = seen.emplace(s, i);
    if (!fresh)
      return fail(&NpcReport::simplicial, "corners of " + model.label_text(link.sources[it->second]) + " and " +
                                              model.label_text(link.sources[i]) + " span the same simplex " + describe(s));
  }
  for (const auto& [s, i] : seen) {
    if (s.size() < 3) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<std::uint32_t> face;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) face.push_back(s[j]);
      if (!seen.count(face))
        return fail(&NpcReport::simplicial, "face " + describe(face) + " of " + describe(s) + " is missing");
    }
  }

  std::size_t m = link.vertices.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (const auto& [s, i] : seen)
    if (s.size() == 2) adj[s[0]][s[1]] = adj[s[1]][s[0]] = true;
  std::vector<std::uint32_t> r, p(m);
  for (std::uint32_t i = 0; i < m; ++i) p[i] = i;
  bool stop = false;
  std::string bad;
  detail::maximal_cliques(
      adj, r, p, {},
      [&](const std::vector<std::uint32_t>& clique) {
        if (clique.size() < 3) return true;
        std::vector<std::uint32_t> s = clique;
        std::sort(s.begin(), s.end());
        if (seen.count(s)) return true;
        bad = describe(s);
        return false;
      },
      stop);
  if (stop) return fail(&NpcReport::flag, "clique " + bad + " spans no simplex");
  return true;
}

/// Every vertex link is a flag simplicial complex.
inline NpcReport check_npc(const CubeComplex& model) {
  NpcReport report;
  for (Parameter v : model.vertices()) {
    ++report.vertices_checked;
    if (!check_link(model, model.link_of(v), report)) break;
  }
  return report;
}

}  // namespace vcube
