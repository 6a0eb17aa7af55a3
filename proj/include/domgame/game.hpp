#pragma once

#include <stdexcept>
#include <string>

#include "domgame/graph.hpp"

namespace domgame {

enum class Player { dominator, staller };

constexpr Player opponent(Player p) {
  return p == Player::dominator ? Player::staller : Player::dominator;
}

inline std::string player_name(Player p) {
  return p == Player::dominator ? "Dominator" : "Staller";
}

enum class Neighborhood { closed, open };

/// One of the five move rules. A vertex is playable while its newness
/// neighborhood still contains an uncovered vertex; playing it covers its
/// coverage neighborhood. The L-game additionally forbids repeats.
struct Variant {
  Neighborhood newness = Neighborhood::closed;
  Neighborhood coverage = Neighborhood::closed;
  bool no_repeat = false;

  static constexpr Variant domination() {
    return {Neighborhood::closed, Neighborhood::closed, false};
  }
  static constexpr Variant total_domination() {
    return {Neighborhood::open, Neighborhood::open, false};
  }
  static constexpr Variant z_domination() {
    return {Neighborhood::open, Neighborhood::closed, false};
  }
  static constexpr Variant l_domination() {
    return {Neighborhood::closed, Neighborhood::open, true};
  }
  static constexpr Variant ll_domination() {
    return {Neighborhood::closed, Neighborhood::open, false};
  }

  constexpr bool operator==(const Variant&) const = default;

  bool admitted() const {
    return *this == domination() || *this == total_domination() ||
           *this == z_domination() || *this == l_domination() ||
           *this == ll_domination();
  }

  std::string code() const {
    if (*this == domination()) return "d";
    if (*this == total_domination()) return "t";
    if (*this == z_domination()) return "z";
    if (*this == l_domination()) return "l";
    if (*this == ll_domination()) return "ll";
    return "?";
  }

  static Variant from_code(const std::string& code) {
    if (code == "d") return domination();
    if (code == "t") return total_domination();
    if (code == "z") return z_domination();
    if (code == "l") return l_domination();
    if (code == "ll") return ll_domination();
    throw std::invalid_argument("unknown variant code: " + code);
  }
};

inline VertexSet newness_neighborhood(const Graph& g, Variant v, int vertex) {
  return v.newness == Neighborhood::closed ? g.closed_neighborhood(vertex)
                                           : g.open_neighborhood(vertex);
}

inline VertexSet coverage_neighborhood(const Graph& g, Variant v, int vertex) {
  return v.coverage == Neighborhood::closed ? g.closed_neighborhood(vertex)
                                            : g.open_neighborhood(vertex);
}

/// Position of a game in progress. Immutable; apply() returns the successor.
/// `covered` is the pre-dominated set united with the coverage neighborhoods
/// of all moves so far. `forbidden` is only populated for no-repeat variants;
/// in normalized form it also absorbs every vertex whose closed neighborhood
/// is covered, which collapses positions that differ only in dead history.
class GameState {
 public:
  const Graph& graph() const { return *graph_; }
  Variant variant() const { return variant_; }
  VertexSet covered() const { return covered_; }
  VertexSet forbidden() const { return forbidden_; }
  Player to_move() const { return to_move_; }
  int moves_made() const { return moves_made_; }
  bool normalized() const { return normalize_; }

  friend GameState new_state(const Graph&, Variant, VertexSet, Player, bool);
  friend GameState apply(const GameState&, int);

 private:
  const Graph* graph_ = nullptr;
  Variant variant_;
  VertexSet covered_;
  VertexSet forbidden_;
  Player to_move_ = Player::dominator;
  int moves_made_ = 0;
  bool normalize_ = true;
};

namespace game_detail {

inline VertexSet saturated_vertices(const Graph& g, VertexSet covered) {
  VertexSet out;
  for (int v = 0; v < g.n(); ++v)
    if (g.closed_neighborhood(v).subset_of(covered)) out.add(v);
  return out;
}

}  // namespace game_detail

inline GameState new_state(const Graph& g, Variant variant, VertexSet predominated,
                           Player starter, bool normalize_forbidden = true) {
  if (!variant.admitted()) throw std::invalid_argument("variant not admitted");
  if (has_isolated_vertex(g))
    throw std::invalid_argument("games are only played on isolate-free graphs");
  if (!predominated.subset_of(g.vertices()))
    throw std::invalid_argument("predominated set contains vertices outside the graph");
  GameState s;
  s.graph_ = &g;
  s.variant_ = variant;
  s.covered_ = predominated;
  s.to_move_ = starter;
  s.normalize_ = normalize_forbidden;
  if (variant.no_repeat && normalize_forbidden)
    s.forbidden_ = game_detail::saturated_vertices(g, predominated);
  return s;
}

/// Vertices that are legal moves: the newness neighborhood must reach an
/// uncovered vertex, and no-repeat variants exclude forbidden vertices.
/// Empty exactly when the game is over.
inline VertexSet legal_moves(const GameState& s) {
  const Graph& g = s.graph();
  VertexSet out;
  for (int v = 0; v < g.n(); ++v) {
    if (s.variant().no_repeat && s.forbidden().contains(v)) continue;
    if ((newness_neighborhood(g, s.variant(), v) - s.covered()).any()) out.add(v);
  }
  return out;
}

inline bool is_terminal(const GameState& s) { return legal_moves(s).empty(); }

inline GameState apply(const GameState& s, int vertex) {
  const Graph& g = s.graph();
  if (vertex < 0 || vertex >= g.n())
    throw std::invalid_argument("move out of range: " + std::to_string(vertex));
  if (!legal_moves(s).contains(vertex))
    throw std::invalid_argument("illegal move: " + std::to_string(vertex));
  GameState next = s;
  next.covered_ |= coverage_neighborhood(g, s.variant(), vertex);
  if (s.variant().no_repeat) {
    next.forbidden_.add(vertex);
    if (s.normalized())
      next.forbidden_ |= game_detail::saturated_vertices(g, next.covered_);
  }
  next.to_move_ = opponent(s.to_move());
  next.moves_made_ = s.moves_made() + 1;
  return next;
}

}  // namespace domgame
