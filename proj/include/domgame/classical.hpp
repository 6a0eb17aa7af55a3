#pragma once

#include <stdexcept>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

namespace classical_detail {

inline bool cover_exists(const std::vector<VertexSet>& coverers, VertexSet target,
                         const std::vector<VertexSet>& cover, VertexSet covered,
                         int left) {
  if (covered == target) return true;
  if (left == 0) return false;
  // Branch over the vertices able to cover the lowest uncovered vertex.
  const int u = (target - covered).lowest();
  bool found = false;
  coverers[static_cast<std::size_t>(u)].for_each([&](int v) {
    if (found) return;
    found = cover_exists(coverers, target, cover,
                         covered | cover[static_cast<std::size_t>(v)], left - 1);
  });
  return found;
}

/// Smallest k such that some k-subset of vertices covers V under the given
/// per-vertex cover masks; cardinalities searched in increasing order.
inline int min_cover_size(const Graph& g, const std::vector<VertexSet>& cover) {
  const int n = g.n();
  const VertexSet target = g.vertices();
  std::vector<VertexSet> coverers(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    cover[static_cast<std::size_t>(v)].for_each(
        [&](int u) { coverers[static_cast<std::size_t>(u)].add(v); });
  for (int u = 0; u < n; ++u)
    if (coverers[static_cast<std::size_t>(u)].empty())
      throw std::invalid_argument("vertex cannot be covered");
  for (int k = 1; k <= n; ++k)
    if (cover_exists(coverers, target, cover, VertexSet{}, k)) return k;
  throw std::logic_error("no cover found");
}

}  // namespace classical_detail

/// Minimum size of a set whose closed neighborhoods cover the graph.
inline int domination_number(const Graph& g) {
  std::vector<VertexSet> cover;
  cover.reserve(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) cover.push_back(g.closed_neighborhood(v));
  return classical_detail::min_cover_size(g, cover);
}

/// Minimum size of a set whose open neighborhoods cover the graph.
inline int total_domination_number(const Graph& g) {
  if (has_isolated_vertex(g))
    throw std::invalid_argument("total domination needs an isolate-free graph");
  std::vector<VertexSet> cover;
  cover.reserve(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) cover.push_back(g.open_neighborhood(v));
  return classical_detail::min_cover_size(g, cover);
}

struct ClassicalResult {
  int gamma = 0;
  int gamma_t = 0;
};

inline ClassicalResult classical_numbers(const Graph& g) {
  return {domination_number(g), total_domination_number(g)};
}

}  // namespace domgame
