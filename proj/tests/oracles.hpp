#pragma once

// Reference computations built from forest operations only.

#include <functional>
#include <map>
#include <set>
#include <string>

#include "vcube/forest.hpp"

namespace vcube::testing {

// Hyperplanes of the base space computed from forests alone: each PF_n(1)
// forest is glued to its flip, and the two outward faces across e of each
// 2-subcube σ and of r_e σ are opposite sides of one square.
inline std::map<std::string, std::string> oracle_hyperplanes(int n) {
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    auto it = parent.find(x);
    if (it == parent.end()) return parent[x] = x;
    if (it->second == x) return x;
    return it->second = find(it->second);
  };
  auto unite = [&](const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  };
  for (const auto& f : enumerate_forests(n, 1)) unite(serialize_forest(f), serialize_forest(flip(f, internal_edges(f)[0])));
  if (n >= 3)
    for (const auto& s : enumerate_forests(n, 2))
      for (EdgeId e : internal_edges(s))
        unite(serialize_forest(delete_edge(s, e)), serialize_forest(delete_edge(flip(s, e), e)));
  std::map<std::string, std::string> out;
  for (const auto& f : enumerate_forests(n, 1)) out[serialize_forest(f)] = find(serialize_forest(f));
  return out;
}

inline std::size_t class_count(const std::map<std::string, std::string>& classes) {
  std::set<std::string> roots;
  for (const auto& [_, r] : classes) roots.insert(r);
  return roots.size();
}

}  // namespace vcube::testing
