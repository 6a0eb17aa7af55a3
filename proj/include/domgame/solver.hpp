#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "domgame/game.hpp"
#include "domgame/graph.hpp"

namespace domgame {

struct SolveOptions {
  /// Transposition entries allowed before the solve aborts.
  std::size_t memo_limit = std::size_t{1} << 23;
  /// Fold saturated vertices into the forbidden set (L-game memo keys).
  bool normalize_forbidden = true;
};

struct SolveResult {
  int length = 0;
  /// Moves achieving the optimum for the player to move; empty iff length 0.
  VertexSet optimal_first;
  std::uint64_t states_visited = 0;
};

class SolverLimitError : public std::runtime_error {
 public:
  explicit SolverLimitError(std::size_t limit)
      : std::runtime_error("solver memo table exceeded " + std::to_string(limit) +
                           " entries") {}
};

namespace solver_detail {

struct MemoKey {
  VertexSet covered;
  VertexSet forbidden;
  Player to_move;
  bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    std::uint64_t h = hash_set(k.covered);
    h ^= hash_set(k.forbidden) * 0x9e3779b97f4a7c15ULL;
    h ^= k.to_move == Player::staller ? 0xda942042e4dd58b5ULL : 0;
    return static_cast<std::size_t>(mix_bits(h));
  }
};

class MinimaxSolver {
 public:
  MinimaxSolver(const Graph& g, Variant variant, const SolveOptions& opts)
      : graph_(g), variant_(variant), opts_(opts) {}

  /// Residual game length from s under optimal play.
  int solve(const GameState& s) {
    const VertexSet legal = legal_moves(s);
    if (legal.empty()) return 0;
    const MemoKey key{s.covered(), s.forbidden(), s.to_move()};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const bool dominator = s.to_move() == Player::dominator;
    int best = dominator ? std::numeric_limits<int>::max() : -1;
    legal.for_each([&](int v) {
      if (skip_move(s, v)) return;
      const int val = 1 + solve(apply(s, v));
      best = dominator ? std::min(best, val) : std::max(best, val);
    });
    if (best < 0 || best == std::numeric_limits<int>::max())
      throw std::logic_error("no coverage-growing move in a non-terminal state");

    if (memo_.size() >= opts_.memo_limit) throw SolverLimitError(opts_.memo_limit);
    memo_.emplace(key, static_cast<std::int16_t>(best));
    return best;
  }

  /// Value of each legal move at s, ascending by vertex. Every legal move is
  /// evaluated here, including LL moves the inner search prunes.
  std::vector<std::pair<int, int>> move_values(const GameState& s) {
    std::vector<std::pair<int, int>> out;
    legal_moves(s).for_each(
        [&](int v) { out.emplace_back(v, 1 + solve(apply(s, v))); });
    return out;
  }

  std::uint64_t states_visited() const { return memo_.size(); }

 private:
  // In the LL-game a move whose coverage neighborhood is already covered
  // leaves the position unchanged except for the turn. Handing the turn to
  // Staller can never help Dominator, and a coverage-growing move always
  // exists while an uncovered vertex remains, so the minimizing side searches
  // growing moves only. This also makes the recursion well-founded: covered
  // grows on every explored edge except Staller's turn-passing ones.
  bool skip_move(const GameState& s, int v) const {
    if (variant_.no_repeat || variant_.coverage != Neighborhood::open ||
        variant_.newness != Neighborhood::closed)
      return false;
    if (s.to_move() != Player::dominator) return false;
    return coverage_neighborhood(graph_, variant_, v).subset_of(s.covered());
  }

  const Graph& graph_;
  Variant variant_;
  SolveOptions opts_;
  std::unordered_map<MemoKey, std::int16_t, MemoKeyHash> memo_;
};

}  // namespace solver_detail

/// Residual value and optimal moves of an arbitrary position.
inline SolveResult solve_state(const GameState& state, const SolveOptions& opts = {}) {
  solver_detail::MinimaxSolver solver(state.graph(), state.variant(), opts);
  SolveResult result;
  if (is_terminal(state)) return result;

  const bool dominator = state.to_move() == Player::dominator;
  result.length = dominator ? std::numeric_limits<int>::max() : -1;
  for (auto [v, val] : solver.move_values(state)) {
    if (val == result.length) {
      result.optimal_first.add(v);
    } else if (dominator ? val < result.length : val > result.length) {
      result.length = val;
      result.optimal_first = VertexSet::single(v);
    }
  }
  result.states_visited = solver.states_visited();
  return result;
}

/// Exact game length under optimal play (Dominator minimizes the number of
/// moves, Staller maximizes) together with the optimal first moves.
inline SolveResult game_length(const Graph& g, Variant variant, Player starter,
                               VertexSet predominated = {},
                               const SolveOptions& opts = {}) {
  return solve_state(new_state(g, variant, predominated, starter, opts.normalize_forbidden),
                     opts);
}

namespace solver_detail {

struct BruteState {
  VertexSet covered;
  VertexSet played;
  Player to_move;
};

inline int brute_recurse(const Graph& g, Variant variant, const BruteState& s,
                         int budget) {
  VertexSet legal;
  for (int v = 0; v < g.n(); ++v) {
    if (variant.no_repeat && s.played.contains(v)) continue;
    if ((newness_neighborhood(g, variant, v) - s.covered).any()) legal.add(v);
  }
  if (legal.empty()) return 0;
  if (budget == 0) return 0;

  const bool dominator = s.to_move == Player::dominator;
  int best = dominator ? std::numeric_limits<int>::max() : -1;
  std::vector<std::pair<VertexSet, VertexSet>> seen;
  legal.for_each([&](int v) {
    BruteState child{s.covered | coverage_neighborhood(g, variant, v),
                     s.played | VertexSet::single(v), opponent(s.to_move)};
    const auto id = std::make_pair(child.covered, child.played);
    if (std::find(seen.begin(), seen.end(), id) != seen.end()) return;
    seen.push_back(id);
    const int val = 1 + brute_recurse(g, variant, child, budget - 1);
    best = dominator ? std::min(best, val) : std::max(best, val);
  });
  return best;
}

}  // namespace solver_detail

/// Unmemoized reference search: plain game-tree recursion with no
/// transposition table and no forbidden-set normalization. Play length is
/// budgeted at n+3 moves; the budget is unreachable under optimal play, so a
/// result that hits it signals a broken game model and is rejected.
inline int brute_length(const Graph& g, Variant variant, Player starter,
                        VertexSet predominated = {}) {
  const GameState initial = new_state(g, variant, predominated, starter, false);
  const int budget = g.n() + 3;
  const int value = solver_detail::brute_recurse(
      g, variant, {initial.covered(), VertexSet{}, starter}, budget);
  if (value >= budget)
    throw std::runtime_error("brute_length exceeded its recursion budget");
  return value;
}

/// A full optimal-vs-optimal play, lowest vertex index breaking ties.
inline std::vector<std::pair<Player, int>> optimal_line(
    const Graph& g, Variant variant, Player starter, VertexSet predominated = {},
    const SolveOptions& opts = {}) {
  solver_detail::MinimaxSolver solver(g, variant, opts);
  GameState s = new_state(g, variant, predominated, starter, opts.normalize_forbidden);
  std::vector<std::pair<Player, int>> line;
  while (!is_terminal(s)) {
    const bool dominator = s.to_move() == Player::dominator;
    int best_val = dominator ? std::numeric_limits<int>::max() : -1;
    int best_v = -1;
    for (auto [v, val] : solver.move_values(s)) {
      if (dominator ? val < best_val : val > best_val) {
        best_val = val;
        best_v = v;
      }
    }
    line.emplace_back(s.to_move(), best_v);
    s = apply(s, best_v);
  }
  return line;
}

}  // namespace domgame
