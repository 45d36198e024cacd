#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxrho/matrix.hpp"

namespace maxrho {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

inline constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

/// Undirected simple graph on vertices 0..n-1 with optional per-vertex loops.
///
/// Adjacency is a packed bit row per vertex. A loop is a flag, never a bit in
/// the row; it contributes 2 to the degree and 2 to the diagonal of A(G).
/// Values are immutable; use GraphBuilder to derive modified copies.
class Graph {
 public:
  /// Edgeless graph on n vertices, 1 <= n <= 2^16.
  explicit Graph(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  bool adjacent(Vertex u, Vertex v) const;
  bool has_loop(Vertex v) const;
  bool has_loops() const noexcept;

  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;
  std::size_t edge_count() const;
  std::size_t loop_count() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  VertexSet neighbors(Vertex v) const;
  VertexSet loops() const;

  std::span<const std::uint64_t> row(Vertex v) const;

  bool operator==(const Graph& other) const = default;

 private:
  friend class GraphBuilder;

  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint8_t> loops_;
};

/// Single-owner mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  std::size_t order() const noexcept { return g_.order(); }
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  bool has_loop(Vertex v) const { return g_.has_loop(v); }

  /// Adds edge uv; u == v is rejected (loops go through set_loop).
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  GraphBuilder& set_loop(Vertex v, bool present = true);

  const Graph& view() const noexcept { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  void set_bit(Vertex u, Vertex v, bool on);

  Graph g_;
};

/// Simple graph with exactly the given edges; duplicates collapse.
Graph build(std::size_t n, std::span<const Edge> edges);
Graph build(std::size_t n, std::initializer_list<Edge> edges);

/// Degrees in descending order, loops counting 2.
std::vector<std::size_t> degree_sequence(const Graph& g);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g);

/// Complement of a loop-free graph.
Graph complement(const Graph& g);

/// Subgraph induced by s, relabelled 0..|s|-1 in the order of s.
Graph induced(const Graph& g, const VertexSet& s);

/// Copy of a loop-free graph with a loop at every vertex.
Graph add_loops(const Graph& g);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Integer adjacency matrix; loops put 2 on the diagonal.
IntMatrix adjacency_matrix(const Graph& g);

/// Isomorphism-invariant byte string; see canonical.cpp. Requires n <= 12, no loops.
std::string canonical_form(const Graph& g);

}  // namespace maxrho
