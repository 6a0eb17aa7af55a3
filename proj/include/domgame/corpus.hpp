#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "domgame/graph.hpp"
#include "domgame/graph6.hpp"

namespace domgame {

namespace trees_detail {

// Level sequence of a rooted tree in preorder, root at level 0, child
// subtrees attached in non-increasing lexicographic order.
using Encoding = std::vector<std::uint8_t>;

inline bool lex_less(const Encoding& a, const Encoding& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// All canonical rooted-tree encodings for orders 1..max_order.
/// result[m] holds the encodings of the rooted trees on m vertices.
inline std::vector<std::vector<Encoding>> rooted_tables(int max_order) {
  std::vector<std::vector<Encoding>> table(static_cast<std::size_t>(max_order) + 1);
  if (max_order >= 1) table[1] = {Encoding{0}};
  for (int m = 2; m <= max_order; ++m) {
    // Candidate subtrees: everything smaller, sorted descending so child
    // lists can be drawn left to right without re-sorting.
    std::vector<const Encoding*> cands;
    for (int s = m - 1; s >= 1; --s)
      for (const Encoding& e : table[static_cast<std::size_t>(s)]) cands.push_back(&e);
    std::sort(cands.begin(), cands.end(),
              [](const Encoding* a, const Encoding* b) { return lex_less(*b, *a); });

    std::vector<const Encoding*> chosen;
    auto emit = [&]() {
      Encoding enc{0};
      for (const Encoding* c : chosen)
        for (std::uint8_t lvl : *c) enc.push_back(static_cast<std::uint8_t>(lvl + 1));
      table[static_cast<std::size_t>(m)].push_back(std::move(enc));
    };
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
      if (remaining == 0) {
        emit();
        return;
      }
      for (std::size_t i = start; i < cands.size(); ++i) {
        if (static_cast<int>(cands[i]->size()) > remaining) continue;
        chosen.push_back(cands[i]);
        self(self, i, remaining - static_cast<int>(cands[i]->size()));
        chosen.pop_back();
      }
    };
    rec(rec, 0, m - 1);
  }
  return table;
}

/// Rooted trees on n vertices whose root subtrees all have at most
/// max_subtree vertices; these are exactly the trees rooted at their unique
/// centroid when max_subtree = floor((n-1)/2).
inline std::vector<Encoding> bounded_root_trees(
    int n, int max_subtree, const std::vector<std::vector<Encoding>>& table) {
  std::vector<Encoding> out;
  std::vector<const Encoding*> cands;
  for (int s = std::min(max_subtree, n - 1); s >= 1; --s)
    for (const Encoding& e : table[static_cast<std::size_t>(s)]) cands.push_back(&e);
  std::sort(cands.begin(), cands.end(),
            [](const Encoding* a, const Encoding* b) { return lex_less(*b, *a); });

  std::vector<const Encoding*> chosen;
  auto emit = [&]() {
    Encoding enc{0};
    for (const Encoding* c : chosen)
      for (std::uint8_t lvl : *c) enc.push_back(static_cast<std::uint8_t>(lvl + 1));
    out.push_back(std::move(enc));
  };
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::size_t i = start; i < cands.size(); ++i) {
      if (static_cast<int>(cands[i]->size()) > remaining) continue;
      chosen.push_back(cands[i]);
      self(self, i, remaining - static_cast<int>(cands[i]->size()));
      chosen.pop_back();
    }
  };
  rec(rec, 0, n - 1);
  return out;
}

/// Adds the edges of the encoded tree using vertices offset..offset+size-1.
inline void add_encoding_edges(const Encoding& enc, int offset,
                               std::vector<std::pair<int, int>>& edges) {
  std::vector<int> stack(enc.size(), 0);
  stack[0] = offset;
  for (std::size_t pos = 1; pos < enc.size(); ++pos) {
    const int lvl = enc[pos];
    edges.emplace_back(stack[static_cast<std::size_t>(lvl - 1)],
                       offset + static_cast<int>(pos));
    stack[static_cast<std::size_t>(lvl)] = offset + static_cast<int>(pos);
  }
}

}  // namespace trees_detail

/// Yields every free tree on `order` vertices exactly once, in a fixed
/// canonical labeling. Unicentroidal trees are rooted at the centroid;
/// bicentroidal trees (even order) are produced as unordered pairs of rooted
/// halves joined by the centroid edge.
class TreeStream {
 public:
  explicit TreeStream(int order) : order_(order) {
    if (order < 1 || order > 18)
      throw std::invalid_argument("tree order must be in 1..18");
    const int half = order / 2;
    const int bound = (order - 1) / 2;
    auto table = trees_detail::rooted_tables(std::max(half, bound));
    uni_ = trees_detail::bounded_root_trees(order, bound, table);
    if (order % 2 == 0) halves_ = std::move(table[static_cast<std::size_t>(half)]);
  }

  int order() const { return order_; }

  std::optional<Graph> next() {
    if (uni_pos_ < uni_.size()) {
      std::vector<std::pair<int, int>> edges;
      trees_detail::add_encoding_edges(uni_[uni_pos_++], 0, edges);
      return Graph(order_, edges);
    }
    if (!halves_.empty() && bi_i_ < halves_.size()) {
      const int half = order_ / 2;
      std::vector<std::pair<int, int>> edges;
      trees_detail::add_encoding_edges(halves_[bi_i_], 0, edges);
      trees_detail::add_encoding_edges(halves_[bi_j_], half, edges);
      edges.emplace_back(0, half);
      if (++bi_j_ >= halves_.size()) {
        ++bi_i_;
        bi_j_ = bi_i_;
      }
      return Graph(order_, edges);
    }
    return std::nullopt;
  }

 private:
  int order_;
  std::vector<trees_detail::Encoding> uni_;
  std::size_t uni_pos_ = 0;
  std::vector<trees_detail::Encoding> halves_;
  std::size_t bi_i_ = 0;
  std::size_t bi_j_ = 0;
};

inline std::vector<Graph> trees_of_order(int n) {
  TreeStream stream(n);
  std::vector<Graph> out;
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

/// Seed-reproducible connected graph: a random recursive spanning tree plus
/// Bernoulli(extra_edge_p) chords. Avoids std distributions so results are
/// identical across standard libraries.
inline Graph random_connected(int n, std::uint64_t seed, double extra_edge_p = 0.3) {
  if (n < 2) throw std::invalid_argument("random_connected needs n >= 2");
  if (n > vertex_cap) throw std::invalid_argument("order exceeds vertex cap");
  std::mt19937_64 rng(mix_bits(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
  Graph tree(n, edges);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!tree.has_edge(u, v) && unit() < extra_edge_p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// -- canonical form for trees -------------------------------------------------

namespace trees_detail {

inline std::string ahu_string(const Graph& g, int v, int parent) {
  std::vector<std::string> child_strings;
  g.open_neighborhood(v).for_each([&](int u) {
    if (u != parent) child_strings.push_back(ahu_string(g, u, v));
  });
  std::sort(child_strings.begin(), child_strings.end());
  std::string out = "(";
  for (const std::string& s : child_strings) out += s;
  out += ')';
  return out;
}

inline std::vector<int> tree_centroids(const Graph& g) {
  const int n = g.n();
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  auto dfs = [&](auto&& self, int v, int parent) -> int {
    size[static_cast<std::size_t>(v)] = 1;
    int heaviest = 0;
    g.open_neighborhood(v).for_each([&](int u) {
      if (u == parent) return;
      const int sub = self(self, u, v);
      heaviest = std::max(heaviest, sub);
      size[static_cast<std::size_t>(v)] += sub;
    });
    weight[static_cast<std::size_t>(v)] =
        std::max(heaviest, n - size[static_cast<std::size_t>(v)]);
    return size[static_cast<std::size_t>(v)];
  };
  dfs(dfs, 0, -1);
  int best = n;
  for (int v = 0; v < n; ++v) best = std::min(best, weight[static_cast<std::size_t>(v)]);
  std::vector<int> cs;
  for (int v = 0; v < n; ++v)
    if (weight[static_cast<std::size_t>(v)] == best) cs.push_back(v);
  return cs;
}

}  // namespace trees_detail

/// Isomorphism-invariant string for a tree (rooted AHU form at the centroid,
/// or the sorted pair of halves for bicentroidal trees).
inline std::string tree_canonical_string(const Graph& g) {
  const auto cs = trees_detail::tree_centroids(g);
  if (cs.size() == 1) return trees_detail::ahu_string(g, cs[0], -1);
  std::string a = trees_detail::ahu_string(g, cs[0], cs[1]);
  std::string b = trees_detail::ahu_string(g, cs[1], cs[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

// -- corpus files -------------------------------------------------------------

inline void write_graph6_lines(std::ostream& os, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) os << to_graph6(g) << '\n';
}

inline std::vector<Graph> read_graph6_lines(std::istream& is) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace domgame
