#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace domgame {

// One machine word per vertex set. Building with DOMGAME_CAP_128 doubles the
// cap at the cost of two-word masks.
#if defined(DOMGAME_CAP_128)
using set_word = unsigned __int128;
#else
using set_word = std::uint64_t;
#endif

inline constexpr int vertex_cap = static_cast<int>(sizeof(set_word) * 8);

namespace detail {

template <class W>
inline int word_popcount(W w) {
  if constexpr (sizeof(W) == 8) {
    return std::popcount(static_cast<std::uint64_t>(w));
  } else {
    return std::popcount(static_cast<std::uint64_t>(w)) +
           std::popcount(static_cast<std::uint64_t>(w >> 64));
  }
}

template <class W>
inline int word_ctz(W w) {
  if constexpr (sizeof(W) == 8) {
    return std::countr_zero(static_cast<std::uint64_t>(w));
  } else {
    const auto lo = static_cast<std::uint64_t>(w);
    if (lo != 0) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(w >> 64));
  }
}

}  // namespace detail

/// Set of vertex indices 0..vertex_cap-1, packed into a single word.
struct VertexSet {
  set_word bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(set_word b) : bits(b) {}

  static constexpr VertexSet all(int n) {
    if (n <= 0) return VertexSet{};
    if (n >= vertex_cap) return VertexSet{~set_word{0}};
    return VertexSet{(set_word{1} << n) - 1};
  }
  static constexpr VertexSet single(int v) { return VertexSet{set_word{1} << v}; }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  constexpr bool contains(int v) const { return (bits >> v) & 1; }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool any() const { return bits != 0; }
  int count() const { return detail::word_popcount(bits); }
  /// Index of the smallest element; set must be non-empty.
  int lowest() const { return detail::word_ctz(bits); }

  void add(int v) { bits |= set_word{1} << v; }
  void remove(int v) { bits &= ~(set_word{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits | o.bits}; }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits & o.bits}; }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits & ~o.bits}; }
  VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
  VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }
  VertexSet& operator-=(VertexSet o) { bits &= ~o.bits; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

  /// Visits members in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    set_word w = bits;
    while (w != 0) {
      fn(detail::word_ctz(w));
      w &= w - 1;
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  /// "{0,2,5}" for reports and error messages.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int v) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    });
    out += '}';
    return out;
  }
};

inline std::uint64_t mix_bits(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_set(VertexSet s) {
  if constexpr (sizeof(set_word) == 8) {
    return mix_bits(static_cast<std::uint64_t>(s.bits));
  } else {
    return mix_bits(static_cast<std::uint64_t>(s.bits)) ^
           mix_bits(~static_cast<std::uint64_t>(s.bits >> 64));
  }
}

}  // namespace domgame
