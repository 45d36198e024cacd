#include "maxrho/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>

#include "maxrho/error.hpp"

namespace maxrho {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0), loops_(n, 0) {
  if (n < 1 || n > kMaxOrder)
    throw InputError("graph order must be in [1, 65536], got " + std::to_string(n));
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_)
    throw InputError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
}

bool Graph::has_loop(Vertex v) const {
  check_vertex(v);
  return loops_[v] != 0;
}

bool Graph::has_loops() const noexcept {
  return std::any_of(loops_.begin(), loops_.end(), [](std::uint8_t l) { return l != 0; });
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[v * words_ + w]);
  return d + (loops_[v] ? 2 : 0);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::min_degree() const {
  std::size_t best = degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

std::size_t Graph::loop_count() const {
  return static_cast<std::size_t>(std::count(loops_.begin(), loops_.end(), std::uint8_t{1}));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  VertexSet out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = bits_[v * words_ + w];
    while (word) {
      const int b = std::countr_zero(word);
      out.push_back(static_cast<Vertex>(w * kWordBits + b));
      word &= word - 1;
    }
  }
  return out;
}

VertexSet Graph::loops() const {
  VertexSet out;
  for (Vertex v = 0; v < n_; ++v)
    if (loops_[v]) out.push_back(v);
  return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {bits_.data() + v * words_, words_};
}

void GraphBuilder::set_bit(Vertex u, Vertex v, bool on) {
  const std::uint64_t mu = std::uint64_t{1} << (v % kWordBits);
  const std::uint64_t mv = std::uint64_t{1} << (u % kWordBits);
  auto& wu = g_.bits_[u * g_.words_ + v / kWordBits];
  auto& wv = g_.bits_[v * g_.words_ + u / kWordBits];
  if (on) {
    wu |= mu;
    wv |= mv;
  } else {
    wu &= ~mu;
    wv &= ~mv;
  }
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw InputError("self-pair (" + std::to_string(u) + "," + std::to_string(v) + "); use set_loop");
  set_bit(u, v, true);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw InputError("self-pair; use set_loop");
  set_bit(u, v, false);
  return *this;
}

GraphBuilder& GraphBuilder::set_loop(Vertex v, bool present) {
  g_.check_vertex(v);
  g_.loops_[v] = present ? 1 : 0;
  return *this;
}

Graph build(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph build(std::size_t n, std::initializer_list<Edge> edges) {
  return build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_regular(const Graph& g) { return g.max_degree() == g.min_degree(); }

Graph complement(const Graph& g) {
  if (g.has_loops()) throw InputError("complement: graph has loops");
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Graph induced(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw InputError("induced: empty vertex set");
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (g.has_loop(s[i])) b.set_loop(static_cast<Vertex>(i));
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return std::move(b).build();
}

Graph add_loops(const Graph& g) {
  if (g.has_loops()) throw InputError("add_loops: graph already has loops");
  GraphBuilder b(g);
  for (Vertex v = 0; v < g.order(); ++v) b.set_loop(v);
  return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw InputError("relabel: permutation size mismatch");
  std::vector<char> hit(n, 0);
  for (Vertex p : perm) {
    if (p >= n || hit[p]) throw InputError("relabel: not a permutation");
    hit[p] = 1;
  }
  GraphBuilder b(n);
  for (const auto& [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  for (Vertex v : g.loops()) b.set_loop(perm[v]);
  return std::move(b).build();
}

IntMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  IntMatrix a(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) a(u, v) = 1;
    if (g.has_loop(u)) a(u, u) = 2;
  }
  return a;
}

}  // namespace maxrho
