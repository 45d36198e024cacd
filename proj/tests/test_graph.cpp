#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "maxrho/error.hpp"
#include "maxrho/families.hpp"
#include "maxrho/graph.hpp"
#include "maxrho/graph6.hpp"
#include "maxrho/perron.hpp"
#include "oracle.hpp"

using namespace maxrho;
using maxrho::testing::random_graph;
using maxrho::testing::random_permutation;

namespace {

Graph cycle(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace

TEST(Graph, BuildAndQuery) {
  const Graph g = build(4, {{0, 1}, {1, 2}, {2, 3}, {1, 0}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 3));
  EXPECT_EQ(g.neighbors(1), (VertexSet{0, 2}));
  EXPECT_EQ(degree_sequence(g), (std::vector<std::size_t>{2, 2, 1, 1}));
  EXPECT_EQ(g.max_degree(), 2u);
  EXPECT_EQ(g.min_degree(), 1u);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(build(3, {{0, 3}}), InputError);
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), InputError);
  EXPECT_THROW(Graph(0), InputError);
  EXPECT_THROW(Graph(kMaxOrder + 1), InputError);
}

TEST(Graph, WordBoundaryRows) {
  GraphBuilder b(130);
  for (Vertex v = 1; v < 130; ++v) b.add_edge(0, v);
  const Graph g = std::move(b).build();
  EXPECT_EQ(g.degree(0), 129u);
  EXPECT_TRUE(g.adjacent(129, 0));
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(complement(g).degree(64), 128u);
}

TEST(Graph, GDegreeSequence) {
  const Graph g = build_G(5, 2);
  EXPECT_EQ(degree_sequence(g), (std::vector<std::size_t>{3, 3, 3, 3, 2}));
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(Graph, ConnectivityAndComponents) {
  const Graph g = build(6, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_FALSE(is_connected(g));
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(comps[1], (VertexSet{3, 4}));
  EXPECT_EQ(comps[2], (VertexSet{5}));
  EXPECT_TRUE(is_connected(cycle(7)));
}

TEST(Graph, RegularityAndComplement) {
  EXPECT_TRUE(is_regular(cycle(5)));
  EXPECT_FALSE(is_regular(build_G(7, 4)));
  const Graph c5 = cycle(5);
  EXPECT_TRUE(is_regular(complement(c5)));
  EXPECT_EQ(complement(c5).edge_count(), 5u);
}

TEST(Graph, ComplementIsInvolution) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, 3 + i % 20, 0.4);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Graph, Induced) {
  const Graph g = cycle(6);
  const Graph h = induced(g, {1, 2, 3, 5});
  EXPECT_EQ(h.order(), 4u);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, Loops) {
  const Graph k3 = complete(3);
  const Graph l = add_loops(k3);
  const IntMatrix a = adjacency_matrix(l);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a(i, i), 2);
  EXPECT_EQ(l.loop_count(), 3u);
  EXPECT_EQ(l.degree(0), 4u);
  EXPECT_NEAR(perron(l).rho, 4.0, 1e-12);
  EXPECT_THROW(complement(l), InputError);
  EXPECT_THROW(add_loops(l), InputError);

  const Graph g = build_G(7, 4);
  EXPECT_NEAR(perron(add_loops(g)).rho - perron(g).rho, 2.0, 1e-9);
}

TEST(Graph, DegreeSumCountsLoopsTwice) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const Graph g0 = random_graph(rng, 2 + i % 12, 0.5);
    GraphBuilder b(g0);
    for (Vertex v = 0; v < g0.order(); v += 2) b.set_loop(v);
    const Graph g = std::move(b).build();
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) sum += g.degree(v);
    EXPECT_EQ(sum, 2 * g.edge_count() + 2 * g.loop_count());
  }
}

TEST(Graph, RelabelValidatesPermutation) {
  const Graph g = cycle(4);
  const std::vector<Vertex> bad{0, 0, 1, 2};
  EXPECT_THROW(relabel(g, bad), InputError);
  const std::vector<Vertex> shift{1, 2, 3, 0};
  EXPECT_EQ(relabel(g, shift), g);
}

TEST(Canonical, RelabelledCyclesAgree) {
  const Graph a = cycle(5);
  const Graph b = build(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(Canonical, PathAndStarDiffer) {
  const Graph p4 = build(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph k13 = build(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_NE(canonical_form(p4), canonical_form(k13));
}

TEST(Canonical, AllRelabellingsOfG52) {
  const Graph g = build_G(5, 2);
  const std::string ref = canonical_form(g);
  std::vector<Vertex> perm{0, 1, 2, 3, 4};
  int count = 0;
  do {
    EXPECT_EQ(canonical_form(relabel(g, perm)), ref);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(count, 120);
}

TEST(Canonical, RandomPermutationInvariance) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 7;
    const Graph g = random_graph(rng, n, 0.5);
    const auto perm = random_permutation(rng, n);
    EXPECT_EQ(canonical_form(relabel(g, perm)), canonical_form(g));
  }
}

TEST(Canonical, SeparatesNonIsomorphicPairs) {
  // Same degree sequence (2,2,2,2,2,2): C6 versus two triangles.
  const Graph c6 = cycle(6);
  const Graph two_triangles = build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_NE(canonical_form(c6), canonical_form(two_triangles));
}

TEST(Canonical, CapabilityBoundary) {
  EXPECT_NO_THROW(canonical_form(cycle(12)));
  EXPECT_THROW(canonical_form(cycle(13)), CapabilityError);
  EXPECT_THROW(canonical_form(add_loops(cycle(4))), InputError);
}

TEST(Graph6, CompleteTriangle) {
  EXPECT_EQ(graph6_encode(complete(3)), "Bw");
  EXPECT_EQ(graph6_decode("Bw"), complete(3));
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 62; ++n) {
    const Graph g = random_graph(rng, n, 0.3);
    EXPECT_EQ(graph6_decode(graph6_encode(g)), g) << "n=" << n;
  }
}

TEST(Graph6, ExtendedHeader) {
  std::mt19937_64 rng(23);
  for (std::size_t n : {63u, 100u, 300u}) {
    const Graph g = random_graph(rng, n, 0.1);
    const std::string text = graph6_encode(g);
    EXPECT_EQ(text[0], '~');
    EXPECT_EQ(graph6_decode(text), g);
  }
}

TEST(Graph6, G52DegreesSurvive) {
  const Graph g = graph6_decode(graph6_encode(build_G(5, 2)));
  EXPECT_EQ(degree_sequence(g), (std::vector<std::size_t>{3, 3, 3, 3, 2}));
}

TEST(Graph6, ParseErrorsCarryOffset) {
  try {
    graph6_decode("B");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  try {
    graph6_decode("C!x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_EQ(graph6_decode(">>graph6<<Bw\n"), complete(3));
  try {
    graph6_decode(">>graph6<<C!x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 11u);
  }
  EXPECT_THROW(graph6_decode(""), ParseError);
  EXPECT_THROW(graph6_decode("Bww"), ParseError);
  EXPECT_THROW(graph6_encode(add_loops(complete(3))), InputError);
}
