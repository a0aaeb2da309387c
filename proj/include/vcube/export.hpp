#pragma once

// JSON and DOT renderings of models and reports.

#include <sstream>
#include <string>

#include <json.hpp>

#include "vcube/complex.hpp"
#include "vcube/cover.hpp"
#include "vcube/hyperplanes.hpp"

namespace vcube {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

inline Json l_ordering_json(const TypeIndex& L) {
  Json out = Json::array();
  for (TypeSet t : L.ordering()) out.push_back(t.to_string());
  return out;
}

/// Header shared by every report: tool version and the parameter bit order.
inline Json report_header(int n, std::string_view what) {
  Json j;
  j["tool"] = "vcube";
  j["version"] = kVersion;
  j["report"] = what;
  j["n"] = n;
  j["L"] = l_ordering_json(TypeIndex(n));
  return j;
}

inline Json label_json(const CubeComplex& model, const SubcubeLabel& c) {
  return Json{{"forest", model.entry(c).text}, {"param", c.param.to_hex(model.types())}};
}

inline Json census_json(const CubeComplex& model) {
  Json subcubes = Json::array(), cubes = Json::array();
  for (int k = 0; k <= model.max_dim(); ++k) {
    subcubes.push_back(model.subcube_count(k));
    cubes.push_back(model.cube_count(k));
  }
  return Json{{"vertices", model.vertex_count()},
              {"edges", model.undirected_edge_count()},
              {"orientedEdges", model.oriented_edge_count()},
              {"squares", model.square_count()},
              {"squareSubcubes", model.max_dim() >= 2 ? model.subcube_count(2) : 0},
              {"subcubes", subcubes},
              {"cubes", cubes}};
}

/// {n, variant, vertices:[paramHex], edges:[{forest, param, reverse}], squares:[[4 subcube labels]], cubes:{k:[orbits]}}
inline Json model_json(const CubeComplex& model) {
  Json j = report_header(model.n(), "model");
  j["variant"] = to_string(model.space());
  j["census"] = census_json(model);
  Json vertices = Json::array();
  for (Parameter v : model.vertices()) vertices.push_back(v.to_hex(model.types()));
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (std::uint32_t id = 0; id < model.oriented_edge_count(); ++id) {
    OrientedEdge e = model.oriented_edge(id);
    Json ej = label_json(model, e);
    ej["type"] = model.edge_type(e).to_string();
    ej["reverse"] = label_json(model, model.reverse(e));
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  auto orbit_json = [&](int k, std::size_t cube) {
    Json orbit = Json::array();
    for (std::uint32_t m : model.cube_members(k, cube)) orbit.push_back(label_json(model, model.subcube(k, m)));
    return orbit;
  };
  Json squares = Json::array();
  for (std::size_t c = 0; c < model.square_count(); ++c) squares.push_back(orbit_json(2, c));
  j["squares"] = std::move(squares);
  Json cubes = Json::object();
  for (int k = 0; k <= model.max_dim(); ++k) {
    Json list = Json::array();
    for (std::size_t c = 0; c < model.cube_count(k); ++c) list.push_back(orbit_json(k, c));
    cubes[std::to_string(k)] = std::move(list);
  }
  j["cubes"] = std::move(cubes);
  return j;
}

inline Json npc_json(const CubeComplex& model, const NpcReport& r) {
  Json j = report_header(model.n(), "npc");
  j["variant"] = to_string(model.space());
  j["verticesChecked"] = r.vertices_checked;
  j["simplicial"] = r.simplicial;
  j["flag"] = r.flag;
  j["pass"] = r.pass();
  j["witnesses"] = Json::array();
  if (!r.pass()) j["witnesses"].push_back(r.witness);
  return j;
}

inline Json witness_json(const Witness& w) {
  Json j{{"kind", w.kind}, {"h1", w.h1}, {"h2", w.h2}, {"vertex", w.vertex}, {"edges", w.edges}};
  if (!w.square.empty()) j["square"] = w.square;
  return j;
}

/// {variant, n, hyperplanes:[{id, type, twoSided, selfIntersects, selfOsculates}], pairs:[{h1,h2,intersect,osculate,interOsculate}], pass, witnesses:[...]}
inline Json specialness_json(const SpecialnessReport& r) {
  Json j = report_header(r.n, "special");
  j["variant"] = to_string(r.space);
  Json hs = Json::array();
  for (const auto& h : r.hyperplanes)
    hs.push_back(Json{{"id", h.id},
                      {"type", h.type.to_string()},
                      {"edges", h.edges},
                      {"twoSided", h.two_sided},
                      {"selfIntersects", h.self_intersects},
                      {"selfOsculates", h.self_osculates}});
  j["hyperplanes"] = std::move(hs);
  Json ps = Json::array();
  for (const auto& p : r.pairs)
    ps.push_back(Json{{"h1", p.h1}, {"h2", p.h2}, {"intersect", p.intersect}, {"osculate", p.osculate}, {"interOsculate", p.inter_osculate()}});
  j["pairs"] = std::move(ps);
  j["checks"] = Json{{"twoSided", r.all_two_sided()},
                     {"noSelfIntersection", r.no_self_intersection()},
                     {"noSelfOsculation", r.no_self_osculation()},
                     {"noInterOsculation", r.no_inter_osculation()}};
  j["sameTypeIntersections"] = r.same_type_intersections;
  j["pass"] = r.pass();
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

inline Json cover_json(const CoverReport& r) {
  Json j = report_header(r.n, "cover");
  j["expectedDegree"] = r.expected_degree;
  j["degree"] = r.degree;
  j["degreeOk"] = r.degree_ok;
  j["cubicalOk"] = r.cubical_ok;
  j["linksOk"] = r.links_ok;
  j["linksChecked"] = r.links_checked;
  j["pass"] = r.pass();
  j["witnesses"] = Json::array();
  if (!r.pass()) j["witnesses"].push_back(r.witness);
  return j;
}

inline Json type_lemma_json(const CubeComplex& model, const TypeLemmaResult& r, std::size_t expected) {
  Json j = report_header(model.n(), "types");
  j["variant"] = to_string(model.space());
  j["hyperplanes"] = r.hyperplanes;
  j["types"] = r.types;
  j["expectedHyperplanes"] = expected;
  j["pass"] = r.holds && r.hyperplanes == expected;
  j["witnesses"] = Json::array();
  if (r.witness)
    j["witnesses"].push_back(Json::array({model.label_text(r.witness->first), model.label_text(r.witness->second)}));
  return j;
}

inline Json relators_json(const RelatorReport& r) {
  Json j = report_header(r.n, "relators");
  j["relators"] = r.relators;
  j["involutions"] = r.involutions;
  j["squareRelators"] = r.square_relators;
  j["imageZero"] = r.image_zero;
  j["liftsClosed"] = r.lifts_closed;
  j["realized"] = r.realized;
  j["squares"] = r.squares;
  j["squaresMatched"] = r.squares_matched;
  j["pass"] = r.pass();
  j["witnesses"] = r.failures;
  return j;
}

/// 1-skeleton: one node per vertex, one edge per 1-cube with its type.
inline std::string skeleton_dot(const CubeComplex& model) {
  std::ostringstream out;
  out << "graph skeleton {\n";
  for (Parameter v : model.vertices()) out << "  \"" << v.to_hex(model.types()) << "\";\n";
  for (std::size_t cube = 0; cube < model.cube_count(1); ++cube) {
    OrientedEdge e = model.subcube(1, model.cube_members(1, cube)[0]);
    out << "  \"" << model.initial(e).to_hex(model.types()) << "\" -- \"" << model.terminal(e).to_hex(model.types())
        << "\" [label=\"" << model.entry(e).text << "\", type=\"" << model.edge_type(e).to_string() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

/// Hyperplane graph: solid edges for intersecting pairs, dashed for osculating ones.
inline std::string hyperplane_dot(const SpecialnessReport& r) {
  std::ostringstream out;
  out << "graph hyperplanes {\n";
  for (const auto& h : r.hyperplanes) {
    out << "  h" << h.id << " [label=\"h" << h.id << " " << h.type.to_string() << "\", type=\"" << h.type.to_string() << "\"";
    if (!h.two_sided || h.self_intersects || h.self_osculates) out << ", color=red";
    out << "];\n";
  }
  for (const auto& p : r.pairs) {
    if (p.intersect) out << "  h" << p.h1 << " -- h" << p.h2 << " [style=solid];\n";
    if (p.osculate) out << "  h" << p.h1 << " -- h" << p.h2 << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vcube
