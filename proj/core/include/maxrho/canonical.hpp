#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "maxrho/graph.hpp"

namespace maxrho {

inline constexpr int kMaxCanonicalOrder = 12;

/// Adjacency of a loop-free graph on at most 16 vertices, one bitmask row per vertex.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, 16> rows{};

  bool adjacent(int u, int v) const { return (rows[u] >> v) & 1U; }
  void add_edge(int u, int v) {
    rows[u] |= static_cast<std::uint16_t>(1U << v);
    rows[v] |= static_cast<std::uint16_t>(1U << u);
  }
  int degree(int v) const { return __builtin_popcount(rows[v]); }
};

SmallGraph to_small(const Graph& g);
Graph from_small(const SmallGraph& g);

/// Result of a search for the lexicographically largest column-order adjacency
/// code. Column k holds the bits (0,k),(1,k),...,(k-1,k) with (0,k) most
/// significant; columns compare in order 1..n-1.
struct CanonicalLabel {
  std::array<std::uint16_t, 16> columns{};
  /// position -> original vertex
  std::array<int, 16> order{};
};

/// Maximum code over all vertex permutations, found by branch-and-bound that
/// keeps only max-column candidates at each depth and skips twin vertices.
CanonicalLabel max_code(const SmallGraph& g);

/// True iff the identity labelling already attains the maximum code.
bool is_max_code(const SmallGraph& g);

}  // namespace maxrho
