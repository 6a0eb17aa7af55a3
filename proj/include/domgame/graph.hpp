#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domgame/vertex_set.hpp"

namespace domgame {

/// Immutable simple graph on vertices 0..n-1 with bitmask neighborhoods.
class Graph {
 public:
  Graph() = default;

  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::string> labels = {})
      : n_(n), adj_(static_cast<std::size_t>(n)), labels_(std::move(labels)) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (n > vertex_cap)
      throw std::invalid_argument("graph exceeds vertex cap of " +
                                  std::to_string(vertex_cap));
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop rejected");
      adj_[static_cast<std::size_t>(u)].add(v);
      adj_[static_cast<std::size_t>(v)].add(u);
    }
  }

  int n() const { return n_; }

  VertexSet vertices() const { return VertexSet::all(n_); }

  VertexSet open_neighborhood(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  VertexSet closed_neighborhood(int v) const {
    return adj_[static_cast<std::size_t>(v)] | VertexSet::single(v);
  }

  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

  bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  std::string label(int v) const {
    if (v >= 0 && static_cast<std::size_t>(v) < labels_.size() && !labels_[static_cast<std::size_t>(v)].empty())
      return labels_[static_cast<std::size_t>(v)];
    return std::to_string(v);
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen;
  for (int v = 0; v < g.n(); ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp = VertexSet::single(v);
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next;
      frontier.for_each([&](int u) { next |= g.open_neighborhood(u); });
      frontier = next - comp;
      comp |= next;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

// -- constructions -----------------------------------------------------------

/// Path 0-1-...-(n-1).
inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

/// Star K_{1,k} with center 0 and leaves 1..k.
inline Graph star_graph(int k) {
  if (k < 1) throw std::invalid_argument("star needs k >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return Graph(k + 1, e);
}

/// K_n with n pendant leaves on each clique vertex. Clique vertices come
/// first (0..n-1), then the leaves grouped by owner.
inline Graph leafy_clique(int n) {
  if (n < 2) throw std::invalid_argument("leafy clique needs n >= 2");
  const int total = n * (1 + n);
  if (total > vertex_cap) throw std::invalid_argument("leafy clique exceeds vertex cap");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) e.emplace_back(i, n + i * n + k);
  return Graph(total, e);
}

/// Vertex (i,j) of the product maps to index i*n(h)+j.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const int n = g.n() * h.n();
  if (n > vertex_cap) throw std::invalid_argument("product exceeds vertex cap");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < h.n(); ++j) {
      const int a = i * h.n() + j;
      g.open_neighborhood(i).for_each([&](int i2) {
        if (i2 > i) e.emplace_back(a, i2 * h.n() + j);
      });
      h.open_neighborhood(j).for_each([&](int j2) {
        if (j2 > j) e.emplace_back(a, i * h.n() + j2);
      });
    }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < h.n(); ++j)
      labels.push_back("(" + g.label(i) + "," + h.label(j) + ")");
  return Graph(n, e, std::move(labels));
}

/// Attaches a private spider S(K_{1,3}) to every vertex of g, identified with
/// the spider's center. Original vertices keep indices 0..n-1; vertex v owns
/// supports n+6v..n+6v+2 and leaves n+6v+3..n+6v+5, with support i adjacent
/// to leaf i.
inline Graph y_corona(const Graph& g) {
  const int n = g.n();
  const int total = 7 * n;
  if (total > vertex_cap) throw std::invalid_argument("Y-corona exceeds vertex cap");
  std::vector<std::pair<int, int>> e = g.edges();
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < 3; ++i) {
      const int support = n + 6 * v + i;
      const int leaf = n + 6 * v + 3 + i;
      e.emplace_back(v, support);
      e.emplace_back(support, leaf);
    }
  return Graph(total, e);
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  std::vector<std::pair<int, int>> e;
  for (const Graph& p : parts) {
    for (auto [u, v] : p.edges()) e.emplace_back(n + u, n + v);
    n += p.n();
  }
  if (n > vertex_cap) throw std::invalid_argument("union exceeds vertex cap");
  return Graph(n, e);
}

}  // namespace domgame
