#pragma once

// Command-line front end. Exit codes: 0 = every requested check passed,
// 1 = a check failed (witnesses in the report), 2 = usage or configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcube/complex.hpp"
#include "vcube/cover.hpp"
#include "vcube/export.hpp"
#include "vcube/forest.hpp"
#include "vcube/hyperplanes.hpp"

namespace vcube::cli {

enum class Format { text, json, dot };

struct RunConfig {
  int n = 3;
  int k = 0;
  std::string space = "base";
  std::string format = "text";
  std::string out;
  std::string what = "skeleton";
  std::string kind = "pvcn";
  std::string word;
  std::string start = "0";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Format parse_format(const std::string& f) {
  if (f == "text") return Format::text;
  if (f == "json") return Format::json;
  if (f == "dot") return Format::dot;
  throw UsageError("unknown format: " + f);
}

inline void require_build_n(int n) {
  if (n < kMinBuildN || n > kMaxBuildN)
    throw UsageError("unsupported n=" + std::to_string(n) + " (supported: " + std::to_string(kMinBuildN) + ".." +
                     std::to_string(kMaxBuildN) + ")");
}

inline Space require_space(const std::string& s) {
  try {
    return parse_space(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline void require_format(Format f, std::initializer_list<Format> allowed, const std::string& command) {
  for (Format a : allowed)
    if (a == f) return;
  throw UsageError("format not available for " + command);
}

inline std::string yes_no(bool ok) { return ok ? "pass" : "FAIL"; }

struct Result {
  std::string body;
  bool pass = true;
};

inline Result run_enumerate(const RunConfig& cfg, Format fmt) {
  require_format(fmt, {Format::text, Format::json}, "enumerate");
  if (cfg.n < 1 || cfg.n > kMaxEnumerationLabels) throw UsageError("unsupported n=" + std::to_string(cfg.n));
  if (cfg.k < 0 || cfg.k > cfg.n - 1) throw UsageError("k must be in 0..n-1");
  auto forests = enumerate_forests(cfg.n, cfg.k);
  if (fmt == Format::json) {
    Json j = report_header(cfg.n, "enumerate");
    j["k"] = cfg.k;
    j["count"] = forests.size();
    Json list = Json::array();
    for (const auto& f : forests) list.push_back(serialize_forest(f));
    j["forests"] = std::move(list);
    j["pass"] = true;
    return {j.dump(2) + "\n", true};
  }
  std::ostringstream out;
  for (const auto& f : forests) out << serialize_forest(f) << '\n';
  return {out.str(), true};
}

inline Result run_build(const RunConfig& cfg, Format fmt) {
  require_build_n(cfg.n);
  CubeComplex model = CubeComplex::build(cfg.n, require_space(cfg.space));
  if (fmt == Format::json) return {model_json(model).dump(2) + "\n", true};
  if (fmt == Format::dot) return {skeleton_dot(model), true};
  std::ostringstream out;
  out << "vcube " << kVersion << " build n=" << cfg.n << " space=" << cfg.space << '\n'
      << "vertices: " << model.vertex_count() << '\n'
      << "edges: " << model.undirected_edge_count() << '\n'
      << "oriented_edges: " << model.oriented_edge_count() << '\n'
      << "squares: " << model.square_count() << '\n'
      << "square_subcubes: " << (model.max_dim() >= 2 ? model.subcube_count(2) : 0) << '\n';
  out << "subcubes:";
  for (int k = 0; k <= model.max_dim(); ++k) out << ' ' << model.subcube_count(k);
  out << "\ncubes:";
  for (int k = 0; k <= model.max_dim(); ++k) out << ' ' << model.cube_count(k);
  out << '\n';
  return {out.str(), true};
}

inline Result run_check_npc(const RunConfig& cfg, Format fmt) {
  require_format(fmt, {Format::text, Format::json}, "check npc");
  require_build_n(cfg.n);
  CubeComplex model = CubeComplex::build(cfg.n, require_space(cfg.space));
  NpcReport r = check_npc(model);
  if (fmt == Format::json) return {npc_json(model, r).dump(2) + "\n", r.pass()};
  std::ostringstream out;
  out << "check npc n=" << cfg.n << " space=" << cfg.space << '\n'
      << "vertices_checked: " << r.vertices_checked << '\n'
      << "simplicial: " << yes_no(r.simplicial) << '\n'
      << "flag: " << yes_no(r.flag) << '\n';
  if (!r.pass()) out << "witness: " << r.witness << '\n';
  out << "pass: " << (r.pass() ? "true" : "false") << '\n';
  return {out.str(), r.pass()};
}

inline Result run_check_special(const RunConfig& cfg, Format fmt) {
  require_format(fmt, {Format::text, Format::json, Format::dot}, "check special");
  require_build_n(cfg.n);
  CubeComplex model = CubeComplex::build(cfg.n, require_space(cfg.space));
  SpecialnessReport r = specialness_report(model);
  if (fmt == Format::json) return {specialness_json(r).dump(2) + "\n", r.pass()};
  if (fmt == Format::dot) return {hyperplane_dot(r), r.pass()};
  std::ostringstream out;
  out << "check special n=" << cfg.n << " space=" << cfg.space << '\n'
      << "hyperplanes: " << r.hyperplanes.size() << '\n'
      << "two_sided: " << yes_no(r.all_two_sided()) << '\n'
      << "self_intersect: " << yes_no(r.no_self_intersection()) << '\n'
      << "self_osculate: " << yes_no(r.no_self_osculation()) << '\n'
      << "inter_osculate: " << yes_no(r.no_inter_osculation()) << '\n'
      << "same_type_intersections: " << r.same_type_intersections << '\n';
  for (const auto& w : r.witnesses) {
    out << "witness: " << w.kind << " h" << w.h1;
    if (w.h2 != w.h1) out << " h" << w.h2;
    out << " at " << w.vertex;
    for (const auto& e : w.edges) out << " [" << e << "]";
    if (!w.square.empty()) out << " square " << w.square;
    out << '\n';
  }
  out << "pass: " << (r.pass() ? "true" : "false") << '\n';
  return {out.str(), r.pass()};
}

inline Result run_check_cover(const RunConfig& cfg, Format fmt) {
  require_format(fmt, {Format::text, Format::json}, "check cover");
  require_build_n(cfg.n);
  CoverReport r = verify_covering(cfg.n);
  if (fmt == Format::json) return {cover_json(r).dump(2) + "\n", r.pass()};
  std::ostringstream out;
  out << "check cover n=" << cfg.n << '\n'
      << "degree: " << r.degree << " (expected " << r.expected_degree << ") " << yes_no(r.degree_ok) << '\n'
      << "cubical: " << yes_no(r.cubical_ok) << '\n'
      << "links: " << r.links_checked << " checked " << yes_no(r.links_ok) << '\n';
  if (!r.pass()) out << "witness: " << r.witness << '\n';
  out << "pass: " << (r.pass() ? "true" : "false") << '\n';
  return {out.str(), r.pass()};
}

inline Result run_check_types(const RunConfig& cfg, Format fmt) {
  require_format(fmt, {Format::text, Format::json}, "check types");
  require_build_n(cfg.n);
  if (require_space(cfg.space) != Space::base) throw UsageError("check types runs on the base space");
  CubeComplex model = CubeComplex::build(cfg.n, Space::base);
  TypeLemmaResult r = verify_type_lemma(model);
  std::size_t expected = TypeIndex(cfg.n).size();
  bool pass = r.holds && r.hyperplanes == expected;
  if (fmt == Format::json) return {type_lemma_json(model, r, expected).dump(2) + "\n", pass};
  std::ostringstream out;
  out << "check types n=" << cfg.n << " space=base\n"
      << "hyperplanes: " << r.hyperplanes << " (expected " << expected << ")\n"
      << "types: " << r.types << '\n'
      << "type_lemma: " << yes_no(r.holds) << '\n';
  if (r.witness) out << "witness: " << model.label_text(r.witness->first) << " / " << model.label_text(r.witness->second) << '\n';
  out << "pass: " << (pass ? "true" : "false") << '\n';
  return {out.str(), pass};
}

inline Result run_check_relators(const RunConfig& cfg, Format fmt) {
  require_format(fmt, {Format::text, Format::json}, "check relators");
  require_build_n(cfg.n);
  RelatorReport r = verify_relators(cfg.n);
  if (fmt == Format::json) return {relators_json(r).dump(2) + "\n", r.pass()};
  std::ostringstream out;
  out << "check relators n=" << cfg.n << '\n'
      << "relators: " << r.relators << " (" << r.involutions << " involution, " << r.square_relators << " square)\n"
      << "image_zero: " << r.image_zero << '\n'
      << "lifts_closed: " << r.lifts_closed << '\n'
      << "realized_by_squares: " << r.realized << '\n'
      << "squares_matched: " << r.squares_matched << " of " << r.squares << '\n';
  for (const auto& f : r.failures) out << "witness: " << f << '\n';
  out << "pass: " << (r.pass() ? "true" : "false") << '\n';
  return {out.str(), r.pass()};
}

inline Result run_lift(const RunConfig& cfg, Format fmt) {
  require_format(fmt, {Format::text, Format::json}, "lift");
  require_build_n(cfg.n);
  CubeComplex model = CubeComplex::build(cfg.n, Space::cover);
  GeneratorWord w;
  Parameter start;
  try {
    w = parse_generator_word(cfg.word, cfg.n);
    start = Parameter::from_hex(cfg.start, model.types());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  LiftResult r = lift_word(model, w, start);
  Parameter image = word_image(w, model.types());
  if (fmt == Format::json) {
    Json j = report_header(cfg.n, "lift");
    j["word"] = word_text(w);
    j["start"] = start.to_hex(model.types());
    j["end"] = r.end.to_hex(model.types());
    j["image"] = image.to_hex(model.types());
    j["closed"] = r.closed;
    Json path = Json::array();
    for (const auto& e : r.path) path.push_back(label_json(model, e));
    j["path"] = std::move(path);
    j["pass"] = true;
    return {j.dump(2) + "\n", true};
  }
  std::ostringstream out;
  out << "word: " << word_text(w) << '\n'
      << "start: " << start.to_hex(model.types()) << '\n'
      << "end: " << r.end.to_hex(model.types()) << '\n'
      << "image: " << image.to_hex(model.types()) << '\n'
      << "closed: " << (r.closed ? "true" : "false") << '\n';
  return {out.str(), true};
}

inline Result run_presentation(const RunConfig& cfg, Format fmt) {
  require_format(fmt, {Format::text, Format::json}, "presentation");
  PresentationKind kind;
  Presentation p;
  try {
    kind = parse_presentation_kind(cfg.kind);
    p = presentation(kind, cfg.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (fmt == Format::json) {
    Json j = report_header(cfg.n, "presentation");
    j["kind"] = to_string(kind);
    j["generators"] = p.generators;
    Json rels = Json::array();
    for (const auto& r : p.relators) rels.push_back(Json{{"family", to_string(r.family)}, {"word", r.text()}});
    j["relators"] = std::move(rels);
    j["pass"] = true;
    return {j.dump(2) + "\n", true};
  }
  return {p.text(), true};
}

inline Result run_export(const RunConfig& cfg, Format fmt) {
  require_format(fmt, {Format::dot}, "export");
  require_build_n(cfg.n);
  CubeComplex model = CubeComplex::build(cfg.n, require_space(cfg.space));
  if (cfg.what == "skeleton") return {skeleton_dot(model), true};
  if (cfg.what == "hyperplanes") return {hyperplane_dot(specialness_report(model)), true};
  throw UsageError("unknown export target: " + cfg.what);
}

}  // namespace detail

/// Runs one subcommand. Reports go to `out` (or the --out file), diagnostics to `err`.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Builds the cube complexes D̂_n and M_n and checks their structure", "vcube"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool space) {
    sub->add_option("--n", cfg.n, "number of leaf labels")->capture_default_str();
    if (space) sub->add_option("--space", cfg.space, "base | cover")->capture_default_str();
    sub->add_option("--format", cfg.format, "text | json | dot")->capture_default_str();
    sub->add_option("--out", cfg.out, "write the report to this file instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list canonical forests in PF_n(k)");
  common(enumerate, false);
  enumerate->add_option("--k", cfg.k, "number of internal edges")->capture_default_str();

  auto* build = app.add_subcommand("build", "build a complex and print its census");
  common(build, true);

  auto* check = app.add_subcommand("check", "run a structural check");
  check->require_subcommand(1);
  auto* npc = check->add_subcommand("npc", "links are flag simplicial complexes");
  common(npc, true);
  auto* special = check->add_subcommand("special", "two-sided, no self-intersection, no self-/inter-osculation");
  common(special, true);
  auto* cover = check->add_subcommand("cover", "covering degree, cubical map, link isomorphisms");
  common(cover, false);
  auto* types = check->add_subcommand("types", "edge types coincide with hyperplanes in the base space");
  common(types, true);
  auto* relators = check->add_subcommand("relators", "relators vanish in (Z/2Z)^L, lift closed, bound squares");
  common(relators, false);

  auto* lift = app.add_subcommand("lift", "lift a word in the s_A generators to the cover");
  common(lift, false);
  lift->add_option("--word", cfg.word, "letters like s(1,2) separated by '·' or '*'")->required();
  lift->add_option("--start", cfg.start, "start vertex as parameter hex")->capture_default_str();

  auto* pres = app.add_subcommand("presentation", "print a group presentation");
  common(pres, false);
  pres->add_option("--kind", cfg.kind, "cactus | virtual_cactus | pvcn")->capture_default_str();

  auto* exp = app.add_subcommand("export", "write DOT graphs");
  common(exp, true);
  exp->add_option("--what", cfg.what, "skeleton | hyperplanes")->capture_default_str();

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  detail::Result result;
  try {
    Format fmt = detail::parse_format(cfg.format);
    if (*enumerate) result = detail::run_enumerate(cfg, fmt);
    else if (*build) result = detail::run_build(cfg, fmt);
    else if (*npc) result = detail::run_check_npc(cfg, fmt);
    else if (*special) result = detail::run_check_special(cfg, fmt);
    else if (*cover) result = detail::run_check_cover(cfg, fmt);
    else if (*types) result = detail::run_check_types(cfg, fmt);
    else if (*relators) result = detail::run_check_relators(cfg, fmt);
    else if (*lift) result = detail::run_lift(cfg, fmt);
    else if (*pres) result = detail::run_presentation(cfg, fmt);
    else if (*exp) result = detail::run_export(cfg, fmt);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (cfg.out.empty()) {
    out << result.body;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.out << '\n';
      return 2;
    }
    file << result.body;
  }
  return result.pass ? 0 : 1;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace vcube::cli
