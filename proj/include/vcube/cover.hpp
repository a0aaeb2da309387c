#pragma once

// Covering map M_n -> D̂_n, words in the s_A generators and their image in
// (Z/2Z)^L, path lifting, and the group presentations (cactus, virtual
// cactus, and the s_A presentation of the fundamental group of D̂_n).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vcube/complex.hpp"
#include "vcube/forest.hpp"
#include "vcube/types.hpp"

namespace vcube {

// ---------------------------------------------------------------- covering

/// (τ, s) ↦ (τ, 0). Cover and base share one forest catalog order for equal n.
inline SubcubeLabel covering_image(const SubcubeLabel& c) { return SubcubeLabel{c.forest, Parameter{}}; }

struct CoverReport {
  int n = 0;
  std::uint64_t expected_degree = 0;
  std::uint64_t degree = 0;
  bool degree_ok = false;
  bool cubical_ok = false;
  bool links_ok = false;
  std::size_t links_checked = 0;
  std::string witness;
  bool pass() const { return degree_ok && cubical_ok && links_ok; }
};

inline std::uint64_t covering_degree(int n) {
  TypeIndex L(n);
  Parameter::check_width(L);
  return std::uint64_t{1} << L.size();
}

/// Degree by vertex count, cubes mapping onto cubes compatibly with faces and
/// flips, and a link isomorphism at every cover vertex.
inline CoverReport verify_covering(const CubeComplex& cover, const CubeComplex& base) {
  if (cover.space() != Space::cover || base.space() != Space::base || cover.n() != base.n())
    throw std::invalid_argument("verify_covering needs a cover and a base model with the same n");
  CoverReport r;
  r.n = cover.n();
  r.expected_degree = covering_degree(cover.n());
  r.degree = cover.vertex_count();
  r.degree_ok = r.degree == r.expected_degree && base.vertex_count() == 1;
  if (!r.degree_ok) r.witness = "vertex count " + std::to_string(r.degree) + " != " + std::to_string(r.expected_degree);

  r.cubical_ok = true;
  for (int k = 0; k <= cover.max_dim() && r.cubical_ok; ++k) {
    for (std::size_t cube = 0; cube < cover.cube_count(k) && r.cubical_ok; ++cube) {
      std::set<std::size_t> image;
      std::optional<std::uint32_t> base_cube;
      for (std::uint32_t member : cover.cube_members(k, cube)) {
        SubcubeLabel c = cover.subcube(k, member);
        SubcubeLabel pc = covering_image(c);
        image.insert(pc.forest);
        std::uint32_t bc = base.cube_of(k, base.subcube_id(pc));
        if (base_cube && *base_cube != bc) {
          r.cubical_ok = false;
          r.witness = "cube of " + cover.label_text(c) + " maps onto two base cubes";
          break;
        }
        base_cube = bc;
        for (std::size_t i = 0; i < cover.entry(c).edges.size(); ++i) {
          if (covering_image(cover.face(c, i)) != base.face(pc, i) || covering_image(cover.flip(c, i)) != base.flip(pc, i)) {
            r.cubical_ok = false;
            r.witness = "faces of " + cover.label_text(c) + " do not project to faces";
            break;
          }
        }
      }
      if (r.cubical_ok && image.size() != (std::size_t{1} << k)) {
        r.cubical_ok = false;
        r.witness = "cube " + std::to_string(cube) + " of dimension " + std::to_string(k) + " is not mapped injectively";
      }
    }
  }

  auto normalized = [](const LinkComplex& link) {
    std::set<std::vector<std::uint32_t>> out;
    for (auto s : link.simplices) {
      std::sort(s.begin(), s.end());
      out.insert(std::move(s));
    }
    return out;
  };
  LinkComplex base_link = base.link_of(Parameter{});
  auto base_simplices = normalized(base_link);
  r.links_ok = true;
  for (Parameter v : cover.vertices()) {
    LinkComplex link = cover.link_of(v);
    ++r.links_checked;
    bool ok = link.vertices.size() == base_link.vertices.size() && link.simplices.size() == base_link.simplices.size();
    for (std::size_t i = 0; ok && i < link.vertices.size(); ++i)
      ok = link.vertices[i].param == v && covering_image(link.vertices[i]) == base_link.vertices[i];
    ok = ok && normalized(link) == base_simplices;
    if (!ok) {
      r.links_ok = false;
      r.witness = "link at " + v.to_hex(cover.types()) + " is not isomorphic to the base link";
      break;
    }
  }
  return r;
}

inline CoverReport verify_covering(int n) {
  return verify_covering(CubeComplex::build(n, Space::cover), CubeComplex::build(n, Space::base));
}

// ---------------------------------------------------------------- words

/// Word in the generators s_A; the inverse of s_A is s_{A^r}.
using GeneratorWord = std::vector<OrderedSubset>;

inline std::string letter_text(const OrderedSubset& a) { return "s" + to_string(a); }

inline std::string word_text(const GeneratorWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "·" : "") + letter_text(w[i]);
  return out;
}

inline GeneratorWord inverse(const GeneratorWord& w) {
  GeneratorWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(reversed(*it));
  return out;
}

namespace detail {

/// Splits on '·' (UTF-8), '*' and whitespace.
inline std::vector<std::string> split_letters(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 2, "\xC2\xB7") == 0) {
      flush();
      ++i;
    } else if (text[i] == '*' || text[i] == ' ' || text[i] == '\t') {
      flush();
    } else {
      cur += text[i];
    }
  }
  flush();
  return out;
}

inline std::vector<int> parse_int_list(std::string_view body, std::string_view letter) {
  std::vector<int> out;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      if (cur.empty()) throw std::invalid_argument("malformed letter: " + std::string(letter));
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (c >= '0' && c <= '9') {
      cur += c;
    } else {
      throw std::invalid_argument("malformed letter: " + std::string(letter));
    }
  }
  if (cur.empty()) throw std::invalid_argument("malformed letter: " + std::string(letter));
  out.push_back(std::stoi(cur));
  return out;
}

}  // namespace detail

inline void check_letter(const OrderedSubset& a, int n) {
  if (a.size() < 2) throw std::invalid_argument("letter " + letter_text(a) + " has fewer than two labels");
  if (has_repeats(a)) throw std::invalid_argument("letter " + letter_text(a) + " repeats a label");
  for (int l : a)
    if (l < 1 || l > n) throw std::invalid_argument("letter " + letter_text(a) + " uses a label outside [n]");
}

/// "s(1,2)·s(2,1)"
inline GeneratorWord parse_generator_word(std::string_view text, int n) {
  GeneratorWord w;
  for (const auto& letter : detail::split_letters(text)) {
    if (letter.size() < 4 || letter.substr(0, 2) != "s(" || letter.back() != ')')
      throw std::invalid_argument("malformed letter: " + letter);
    OrderedSubset a = detail::parse_int_list(std::string_view(letter).substr(2, letter.size() - 3), letter);
    check_letter(a, n);
    w.push_back(std::move(a));
  }
  return w;
}

/// s_{A_1} ... s_{A_m} ↦ 1_{A_1} + ... + 1_{A_m}
inline Parameter word_image(const GeneratorWord& w, const TypeIndex& L) {
  Parameter p;
  for (const auto& a : w) {
    check_letter(a, L.n());
    p += Parameter::unit(L, support(a));
  }
  return p;
}

struct LiftResult {
  Parameter end;
  bool closed = false;
  std::vector<OrientedEdge> path;
};

/// Traces w from vertex `start` through the oriented edges of the model.
inline LiftResult lift_word(const CubeComplex& model, const GeneratorWord& w, Parameter start) {
  if (!model.has_vertex(start)) throw std::invalid_argument("start vertex " + start.to_hex(model.types()) + " is not in the model");
  LiftResult r;
  Parameter cur = start;
  for (const auto& a : w) {
    check_letter(a, model.n());
    auto edge = model.find(single_edge_forest(model.n(), a), cur);
    if (!edge) throw std::logic_error("no edge for " + letter_text(a) + " at " + cur.to_hex(model.types()));
    r.path.push_back(*edge);
    cur = model.terminal(*edge);
  }
  r.end = cur;
  r.closed = cur == start;
  return r;
}

/// Cyclic word up to rotation and inversion, as the smallest letter sequence.
inline GeneratorWord cyclic_canonical(const GeneratorWord& w) {
  GeneratorWord best = w;
  for (const GeneratorWord& base : {w, inverse(w)}) {
    GeneratorWord rot = base;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      best = std::min(best, rot);
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
  }
  return best;
}

// ---------------------------------------------------------------- permutations

/// One-line notation, 1-based: p[i-1] is the image of i.
class Permutation {
 public:
  explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) { std::iota(images_.begin(), images_.end(), 1); }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<int> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("not a permutation of [n]");
  }

  /// w_{ij}: reverses [i, j], fixes everything else.
  static Permutation interval_reversal(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("bad interval");
    Permutation p(n);
    for (int k = i; k <= j; ++k) p.images_[static_cast<std::size_t>(k - 1)] = i + j - k;
    return p;
  }

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const { return *this == Permutation(n()); }

  /// (p * q)(i) = p(q(i))
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n()) throw std::invalid_argument("permutation sizes differ");
    std::vector<int> out(p.images_.size());
    for (int i = 1; i <= p.n(); ++i) out[static_cast<std::size_t>(i - 1)] = p(q(i));
    return Permutation(std::move(out));
  }

  Permutation inverse() const {
    std::vector<int> out(images_.size());
    for (int i = 1; i <= n(); ++i) out[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(out));
  }

  /// "p[2,1,3]"
  std::string text() const {
    std::string s = "p[";
    for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? "," : "") + std::to_string(images_[i]);
    return s + "]";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Cactus generator name: "s12" for single-digit indices, "s_10_11" otherwise.
inline std::string cactus_letter(int i, int j) {
  if (i < 10 && j < 10) return "s" + std::to_string(i) + std::to_string(j);
  return "s_" + std::to_string(i) + "_" + std::to_string(j);
}

/// Image in S_n of a word over cactus generators (s12, s_i_j) and permutation
/// letters (p[2,1,3]); letters multiply left to right as functions composed
/// right to left.
inline Permutation perm_image(std::string_view word, int n) {
  Permutation out(n);
  for (const auto& letter : detail::split_letters(word)) {
    if (letter.starts_with("p[") && letter.back() == ']') {
      auto images = detail::parse_int_list(std::string_view(letter).substr(2, letter.size() - 3), letter);
      if (static_cast<int>(images.size()) != n) throw std::invalid_argument("permutation letter of wrong size: " + letter);
      out = out * Permutation(std::move(images));
      continue;
    }
    int i = 0, j = 0;
    if (letter.size() == 3 && letter[0] == 's' && std::isdigit(static_cast<unsigned char>(letter[1])) &&
        std::isdigit(static_cast<unsigned char>(letter[2]))) {
      i = letter[1] - '0';
      j = letter[2] - '0';
    } else if (letter.starts_with("s_")) {
      auto parts = letter.substr(2);
      auto us = parts.find('_');
      if (us == std::string::npos) throw std::invalid_argument("malformed letter: " + letter);
      try {
        i = std::stoi(parts.substr(0, us));
        j = std::stoi(parts.substr(us + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed letter: " + letter);
      }
    } else {
      throw std::invalid_argument("malformed letter: " + letter);
    }
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("letter out of range: " + letter);
    out = out * Permutation::interval_reversal(n, i, j);
  }
  return out;
}

inline bool is_pure(std::string_view word, int n) { return perm_image(word, n).is_identity(); }

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// w(i + k) = w(i) + k for k = 0..j-i: w carries [i, j] onto an interval, order preserved.
inline bool preserves_interval(const Permutation& w, int i, int j) {
  for (int k = 0; k <= j - i; ++k)
    if (w(i + k) != w(i) + k) return false;
  return true;
}

// ---------------------------------------------------------------- presentations

enum class PresentationKind { cactus, virtual_cactus, pvcn };

inline std::string_view to_string(PresentationKind k) {
  switch (k) {
    case PresentationKind::cactus: return "cactus";
    case PresentationKind::virtual_cactus: return "virtual_cactus";
    case PresentationKind::pvcn: return "pvcn";
  }
  return "?";
}

inline PresentationKind parse_presentation_kind(std::string_view text) {
  if (text == "cactus") return PresentationKind::cactus;
  if (text == "virtual_cactus") return PresentationKind::virtual_cactus;
  if (text == "pvcn") return PresentationKind::pvcn;
  throw std::invalid_argument("unknown presentation kind: " + std::string(text));
}

enum class RelatorFamily { involution, commuting, nested, symmetric, conjugation };

inline std::string_view to_string(RelatorFamily f) {
  switch (f) {
    case RelatorFamily::involution: return "involution";
    case RelatorFamily::commuting: return "commuting";
    case RelatorFamily::nested: return "nested";
    case RelatorFamily::symmetric: return "symmetric";
    case RelatorFamily::conjugation: return "conjugation";
  }
  return "?";
}

struct Relator {
  std::vector<std::string> letters;
  RelatorFamily family = RelatorFamily::involution;
  GeneratorWord word;  // pvcn only

  std::string text() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) out += (i ? "·" : "") + letters[i];
    return out;
  }
};

struct Presentation {
  PresentationKind kind = PresentationKind::cactus;
  int n = 0;
  std::vector<std::string> generators;
  std::vector<Relator> relators;

  std::size_t count(RelatorFamily f) const {
    return static_cast<std::size_t>(
        std::count_if(relators.begin(), relators.end(), [&](const Relator& r) { return r.family == f; }));
  }

  /// `gen <name>` lines, then `rel <word>` lines.
  std::string text() const {
    std::ostringstream out;
    for (const auto& g : generators) out << "gen " << g << '\n';
    for (const auto& r : relators) out << "rel " << r.text() << '\n';
    return out.str();
  }
};

/// Ordered subsets of [n] with at least `min_size` elements, by size then lexicographically.
inline std::vector<OrderedSubset> ordered_subsets(int n, std::size_t min_size, TypeSet exclude = {}) {
  std::vector<OrderedSubset> out;
  std::vector<int> pool;
  for (int l = 1; l <= n; ++l)
    if (!exclude.contains(l)) pool.push_back(l);
  for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
    OrderedSubset a;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((mask >> i) & 1u) a.push_back(pool[i]);
    if (a.size() < min_size) continue;
    do {
      out.push_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
  }
  std::sort(out.begin(), out.end(), [](const OrderedSubset& a, const OrderedSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace detail {

inline OrderedSubset concat(std::initializer_list<const OrderedSubset*> parts) {
  OrderedSubset out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

inline Presentation cactus_presentation(int n) {
  Presentation p{PresentationKind::cactus, n, {}, {}};
  std::vector<std::pair<int, int>> intervals;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) intervals.emplace_back(i, j);
  for (auto [i, j] : intervals) p.generators.push_back(cactus_letter(i, j));
  for (auto [i, j] : intervals) p.relators.push_back({{cactus_letter(i, j), cactus_letter(i, j)}, RelatorFamily::involution, {}});
  for (std::size_t a = 0; a < intervals.size(); ++a)
    for (std::size_t b = a + 1; b < intervals.size(); ++b) {
      auto [i, j] = intervals[a];
      auto [k, l] = intervals[b];
      if (j < k || l < i)
        p.relators.push_back({{cactus_letter(i, j), cactus_letter(k, l), cactus_letter(i, j), cactus_letter(k, l)},
                              RelatorFamily::commuting, {}});
    }
  // s_ij s_kl = s_{w(l) w(k)} s_ij for [k, l] strictly inside [i, j].
  for (auto [i, j] : intervals)
    for (auto [k, l] : intervals) {
      if (!(i <= k && l <= j) || (i == k && j == l)) continue;
      Permutation w = Permutation::interval_reversal(n, i, j);
      p.relators.push_back({{cactus_letter(i, j), cactus_letter(k, l), cactus_letter(i, j), cactus_letter(w(l), w(k))},
                            RelatorFamily::nested, {}});
    }
  return p;
}

inline Presentation virtual_cactus_presentation(int n) {
  Presentation p = cactus_presentation(n);
  p.kind = PresentationKind::virtual_cactus;
  std::vector<Permutation> perms = all_permutations(n);
  for (const auto& w : perms)
    if (!w.is_identity()) p.generators.push_back(w.text());
  // Multiplication table of S_n: p·q·(pq)^{-1}, identity letters dropped.
  for (const auto& a : perms)
    for (const auto& b : perms) {
      if (a.is_identity() || b.is_identity()) continue;
      Relator r{{a.text(), b.text()}, RelatorFamily::symmetric, {}};
      Permutation ab = a * b;
      if (!ab.is_identity()) r.letters.push_back(ab.inverse().text());
      p.relators.push_back(std::move(r));
    }
  // w s_ij w^{-1} = s_{w(i) w(j)} when w carries [i, j] order-preservingly onto an interval.
  for (const auto& w : perms)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (!preserves_interval(w, i, j)) continue;
        Relator r{{}, RelatorFamily::conjugation, {}};
        if (!w.is_identity()) r.letters.push_back(w.text());
        r.letters.push_back(cactus_letter(i, j));
        if (!w.is_identity()) r.letters.push_back(w.inverse().text());
        r.letters.push_back(cactus_letter(w(i), w(j)));
        p.relators.push_back(std::move(r));
      }
  return p;
}

inline Presentation pvcn_presentation(int n) {
  Presentation p{PresentationKind::pvcn, n, {}, {}};
  std::vector<OrderedSubset> gens = ordered_subsets(n, 2);
  for (const auto& a : gens) p.generators.push_back(letter_text(a));
  std::set<GeneratorWord> seen;
  auto add = [&](GeneratorWord w, RelatorFamily family) {
    if (!seen.insert(cyclic_canonical(w)).second) return;
    Relator r{{}, family, w};
    for (const auto& a : w) r.letters.push_back(letter_text(a));
    p.relators.push_back(std::move(r));
  };
  // s_A s_{A^r} = 1
  for (const auto& a : gens) add({a, reversed(a)}, RelatorFamily::involution);
  // s_A s_B = s_B s_A for disjoint A, B
  for (const auto& a : gens)
    for (const auto& b : ordered_subsets(n, 2, support(a))) add({a, b, reversed(a), reversed(b)}, RelatorFamily::commuting);
  // s_{A^r} s_{CAB} = s_{CA^rB} s_A, with B and C not both empty
  for (const auto& a : gens) {
    for (const auto& c : ordered_subsets(n, 0, support(a))) {
      for (const auto& b : ordered_subsets(n, 0, support(a) | support(c))) {
        if (b.empty() && c.empty()) continue;
        OrderedSubset ar = reversed(a);
        OrderedSubset cab = concat({&c, &a, &b});
        OrderedSubset car_b = concat({&c, &ar, &b});
        add({ar, cab, ar, reversed(car_b)}, RelatorFamily::nested);
      }
    }
  }
  return p;
}

}  // namespace detail

inline Presentation presentation(PresentationKind kind, int n) {
  if (n < 2) throw std::invalid_argument("presentations need n >= 2");
  switch (kind) {
    case PresentationKind::cactus: return detail::cactus_presentation(n);
    case PresentationKind::virtual_cactus:
      if (n > 7) throw std::invalid_argument("virtual cactus presentation is limited to n <= 7");
      return detail::virtual_cactus_presentation(n);
    case PresentationKind::pvcn:
      if (n > kMaxParameterLabels) throw std::invalid_argument("pvcn presentation is limited to n <= " + std::to_string(kMaxParameterLabels));
      return detail::pvcn_presentation(n);
  }
  throw std::invalid_argument("unknown presentation kind");
}

// ---------------------------------------------------------------- relators vs squares

/// Boundary word of the square through subcube (σ, s): the four oriented edges
/// read around the square starting at the outward corner of σ.
inline std::vector<OrientedEdge> square_boundary(const CubeComplex& model, const SubcubeLabel& sigma) {
  if (model.dim(sigma) != 2) throw std::invalid_argument("square_boundary needs a 2-subcube");
  TypeSet t0 = model.entry(sigma).types[0];
  TypeSet t1 = model.entry(sigma).types[1];
  SubcubeLabel s0 = model.flip_type(sigma, t0);
  SubcubeLabel s01 = model.flip_type(s0, t1);
  SubcubeLabel s1 = model.flip_type(sigma, t1);
  return {model.face_type(sigma, t1), model.face_type(s0, t0), model.face_type(s01, t1), model.face_type(s1, t0)};
}

inline GeneratorWord boundary_word(const CubeComplex& model, const std::vector<OrientedEdge>& path) {
  GeneratorWord w;
  for (const auto& e : path) w.push_back(model.edge_order(e));
  return w;
}

struct RelatorReport {
  int n = 0;
  std::size_t relators = 0;
  std::size_t involutions = 0;
  std::size_t square_relators = 0;  // commuting + nested
  std::size_t image_zero = 0;
  std::size_t lifts_closed = 0;
  std::size_t realized = 0;
  std::size_t squares = 0;
  std::size_t squares_matched = 0;  // squares whose boundary is some relator
  std::vector<std::string> failures;
  bool pass() const {
    return failures.empty() && image_zero == relators && lifts_closed == relators && realized == square_relators &&
           squares_matched == squares;
  }
};

/// Every s_A relator maps to zero in (Z/2Z)^L, lifts to a closed path in the
/// cover, and each non-involution relator bounds a square of the base space.
inline RelatorReport verify_relators(const CubeComplex& base, const CubeComplex& cover) {
  if (base.space() != Space::base || cover.space() != Space::cover || base.n() != cover.n())
    throw std::invalid_argument("verify_relators needs a base and a cover model with the same n");
  int n = base.n();
  RelatorReport r;
  r.n = n;
  Presentation p = presentation(PresentationKind::pvcn, n);

  std::vector<GeneratorWord> square_words;
  for (std::size_t cube = 0; cube < base.square_count(); ++cube) {
    SubcubeLabel sigma = base.subcube(2, base.cube_members(2, cube)[0]);
    square_words.push_back(cyclic_canonical(boundary_word(base, square_boundary(base, sigma))));
  }
  std::set<GeneratorWord> square_set(square_words.begin(), square_words.end());
  r.squares = base.square_count();

  std::set<GeneratorWord> relator_words;
  for (const auto& rel : p.relators) {
    ++r.relators;
    if (rel.family == RelatorFamily::involution) ++r.involutions;
    else ++r.square_relators;
    if (word_image(rel.word, base.types()).is_zero()) ++r.image_zero;
    else r.failures.push_back("nonzero image: " + rel.text());
    bool closed = true;
    for (Parameter start : {Parameter{}, Parameter{cover.vertex_count() - 1}})
      closed = closed && lift_word(cover, rel.word, start).closed;
    if (closed) ++r.lifts_closed;
    else r.failures.push_back("lift not closed: " + rel.text());
    if (rel.family != RelatorFamily::involution) {
      GeneratorWord key = cyclic_canonical(rel.word);
      relator_words.insert(key);
      if (square_set.count(key)) ++r.realized;
      else r.failures.push_back("no square realizes: " + rel.text());
    }
  }
  for (std::size_t cube = 0; cube < square_words.size(); ++cube) {
    if (relator_words.count(square_words[cube])) ++r.squares_matched;
    else r.failures.push_back("square " + std::to_string(cube) + " bounds no relator: " + word_text(square_words[cube]));
  }
  return r;
}

inline RelatorReport verify_relators(int n) {
  return verify_relators(CubeComplex::build(n, Space::base), CubeComplex::build(n, Space::cover));
}

}  // namespace vcube
