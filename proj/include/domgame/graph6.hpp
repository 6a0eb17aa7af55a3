#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

class Graph6Error : public std::runtime_error {
 public:
  enum class Kind { bad_header, truncated, trailing_garbage, cap_exceeded };

  Graph6Error(Kind kind, const std::string& what)
      : std::runtime_error("graph6: " + what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

namespace g6 {

inline bool valid_char(char c) {
  return static_cast<unsigned char>(c) >= 63 && static_cast<unsigned char>(c) <= 126;
}

}  // namespace g6

/// Parses a graph6 string (standard layout: size, then the upper triangle of
/// the adjacency matrix in column order, packed big-endian into 6-bit chunks
/// offset by 63).
inline Graph parse_graph6(std::string_view text) {
  if (text.empty())
    throw Graph6Error(Graph6Error::Kind::bad_header, "empty input");
  if (text.front() == '>')
    throw Graph6Error(Graph6Error::Kind::bad_header,
                      "optional >>graph6<< header not accepted");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    if (!g6::valid_char(text[0]))
      throw Graph6Error(Graph6Error::Kind::bad_header, "size byte out of range");
    n = text[0] - 63;
    pos = 1;
  } else {
    // 126 introduces the 18-bit size form; 126 126 (the 36-bit form) encodes
    // orders far beyond the cap, so it is rejected up front.
    if (text.size() >= 2 && text[1] == 126)
      throw Graph6Error(Graph6Error::Kind::cap_exceeded,
                        "36-bit size form exceeds vertex cap");
    if (text.size() < 4)
      throw Graph6Error(Graph6Error::Kind::truncated, "truncated size field");
    for (int i = 1; i <= 3; ++i) {
      if (!g6::valid_char(text[static_cast<std::size_t>(i)]))
        throw Graph6Error(Graph6Error::Kind::bad_header, "size byte out of range");
      n = (n << 6) | (text[static_cast<std::size_t>(i)] - 63);
    }
    pos = 4;
  }
  if (n < 1)
    throw Graph6Error(Graph6Error::Kind::bad_header, "order must be at least 1");
  if (n > vertex_cap)
    throw Graph6Error(Graph6Error::Kind::cap_exceeded,
                      "order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(vertex_cap));

  const long bit_count = n * (n - 1) / 2;
  const std::size_t data_chars = static_cast<std::size_t>((bit_count + 5) / 6);
  if (text.size() - pos < data_chars)
    throw Graph6Error(Graph6Error::Kind::truncated, "edge data too short");
  if (text.size() - pos > data_chars)
    throw Graph6Error(Graph6Error::Kind::trailing_garbage,
                      "trailing characters after edge data");

  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  int chunk = 0;
  int chunk_bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (chunk_bits == 0) {
        const char c = text[pos++];
        if (!g6::valid_char(c))
          throw Graph6Error(Graph6Error::Kind::bad_header, "edge byte out of range");
        chunk = c - 63;
        chunk_bits = 6;
      }
      if (chunk & (1 << (chunk_bits - 1))) edges.emplace_back(i, j);
      --chunk_bits;
    }
  }
  if (chunk_bits > 0 && (chunk & ((1 << chunk_bits) - 1)) != 0)
    throw Graph6Error(Graph6Error::Kind::trailing_garbage, "nonzero padding bits");

  return Graph(static_cast<int>(n), edges);
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int chunk = 0;
  int chunk_bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++chunk_bits == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        chunk_bits = 0;
      }
    }
  }
  if (chunk_bits > 0)
    out.push_back(static_cast<char>((chunk << (6 - chunk_bits)) + 63));
  return out;
}

}  // namespace domgame
