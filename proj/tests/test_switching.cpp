#include <gtest/gtest.h>

#include <random>

#include "maxrho/error.hpp"
#include "maxrho/families.hpp"
#include "maxrho/partition.hpp"
#include "maxrho/perron.hpp"
#include "maxrho/switching.hpp"
#include "oracle.hpp"

using namespace maxrho;

namespace {

const Graph kC4 = build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});

ComplementProfile one_path(std::size_t n, std::size_t delta, std::size_t interior) {
  ComplementProfile p;
  p.type1 = (n - delta - 1) / 2 - 1;
  p.type2 = {interior};
  if (delta > interior) p.type3 = {delta - interior};
  return p;
}

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return d;
}

}  // namespace

TEST(Switch, LsOnC4) {
  const Graph after = apply(kC4, SwitchMove{MoveKind::LS, {0, 1, 2, 3}});
  EXPECT_EQ(after.edge_count(), 4u);
  EXPECT_TRUE(is_regular(after));
  EXPECT_TRUE(is_connected(after));
  EXPECT_NE(after, kC4);
  EXPECT_NEAR(perron(after).rho, 2.0, 1e-12);
  const SwitchCertificate c = ls_certificate(kC4, 0, 1, 2, 3);
  EXPECT_NEAR(c.hypothesis_value, 0.0, 1e-12);
  EXPECT_TRUE(c.hypothesis_holds);
  EXPECT_TRUE(c.equality_case);
  EXPECT_TRUE(c.conclusion_holds);
  EXPECT_NEAR(c.rho_before, c.rho_after, 1e-9);
}

TEST(Switch, ErrorsNameTheEdge) {
  try {
    apply(kC4, SwitchMove{MoveKind::LS, {0, 2, 1, 3}});
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("must be"), std::string::npos);
  }
  EXPECT_THROW(apply(kC4, SwitchMove{MoveKind::LS, {0, 1, 2}}), InputError);
  EXPECT_THROW(apply(kC4, SwitchMove{MoveKind::LS, {0, 0, 2, 3}}), InputError);
  EXPECT_THROW(apply(kC4, SwitchMove{MoveKind::LS, {0, 1, 2, 9}}), InputError);
  EXPECT_THROW(move_kind_from_string("Op9"), InputError);
}

TEST(Switch, InverseRestores) {
  std::mt19937_64 rng(3);
  int applied = 0;
  for (int i = 0; i < 5000 && applied < 50; ++i) {
    const Graph g = maxrho::testing::random_graph(rng, 6 + i % 5, 0.5);
    const auto perm = maxrho::testing::random_permutation(rng, g.order());
    const SwitchMove m{MoveKind::LS, {perm[0], perm[1], perm[2], perm[3]}};
    EdgeDelta d;
    try {
      d = edge_delta(g, m);
    } catch (const InputError&) {
      continue;
    }
    const Graph after = apply(g, d);
    EXPECT_EQ(after.order(), g.order());
    EXPECT_EQ(degrees(after), degrees(g));
    EXPECT_EQ(apply(after, inverse(d)), g);
    ++applied;
  }
  EXPECT_EQ(applied, 50);
}

TEST(Switch, LsCertificatesOnRandomGraphs) {
  std::mt19937_64 rng(101);
  int checked = 0;
  for (int i = 0; i < 100000 && checked < 200; ++i) {
    const Graph g = maxrho::testing::random_graph(rng, 5 + i % 5, 0.5);
    if (!is_connected(g)) continue;
    const auto perm = maxrho::testing::random_permutation(rng, g.order());
    const Vertex s = perm[0], t = perm[1], v = perm[2], u = perm[3];
    if (!g.adjacent(u, v) || !g.adjacent(s, t) || g.adjacent(s, v) || g.adjacent(t, u)) continue;
    const SwitchCertificate c = ls_certificate(g, s, t, v, u);
    if (!c.hypothesis_holds) continue;
    EXPECT_TRUE(c.conclusion_holds);
    EXPECT_GE(c.rho_after, c.rho_before - 1e-9);
    ++checked;
  }
  EXPECT_EQ(checked, 200);
}

TEST(Switch, G21RewriteIncreasesRho) {
  for (std::size_t n = 9; n <= 31; n += 2) {
    const Graph g21 = build_G2_1(n);
    const Graph after = apply(g21, SwitchMove{MoveKind::LS, {6, 2, 5, 1}});
    EXPECT_GT(perron(after).rho, perron(g21).rho) << n;
    EXPECT_NEAR(perron(after).rho, perron(build_H2(n)).rho, 1e-9) << n;
  }
}

TEST(Op1, SandwichOnProfiles) {
  struct Case {
    std::size_t n, delta, interior;
  };
  for (const Case& c : {Case{15, 6, 3}, Case{13, 6, 1}, Case{13, 6, 2}, Case{13, 8, 4}, Case{60, 7, 2}}) {
    const ComplementProfile p = one_path(c.n, c.delta, c.interior);
    const Graph gloop = add_loops(build_from_profile(c.n, c.delta, p));
    const VertexSet path = profile_paths(c.n, c.delta, p).front();
    const SwitchMove m{MoveKind::Op1, path};
    const SandwichCheck s = op1_sandwich_check(gloop, m);
    EXPECT_TRUE(s.lower_holds) << c.n << " " << c.interior;
    EXPECT_TRUE(s.upper_holds) << c.n << " " << c.interior;
    EXPECT_TRUE(s.symmetric) << c.n << " " << c.interior;
    EXPECT_NEAR(s.x_first, s.x_last, 1e-9);
    EXPECT_NEAR(s.x_second, s.x_penultimate, 1e-9);
    // Interior vertices reach degree n - 3 plus the loop.
    const Graph after = apply(gloop, m);
    for (Vertex v = 0; v < c.n; ++v) EXPECT_EQ(after.degree(v), gloop.degree(v));
  }
}

TEST(Op1, ShortPathRemovesComponent) {
  const std::size_t n = 13, delta = 6;
  const ComplementProfile p = one_path(n, delta, 1);
  const Graph gloop = add_loops(build_from_profile(n, delta, p));
  const VertexSet path = profile_paths(n, delta, p).front();
  ASSERT_EQ(path.size(), 3u);
  const Graph after = apply(gloop, SwitchMove{MoveKind::Op1, path});
  EXPECT_TRUE(after.adjacent(path[0], path[1]));
  EXPECT_TRUE(after.adjacent(path[1], path[2]));
  EXPECT_FALSE(after.adjacent(path[0], path[2]));
  EXPECT_FALSE(after.has_loop(path[1]));
}

TEST(Op2, MonotoneTwice) {
  const std::size_t n = 17, delta = n - 5;
  ComplementProfile p;
  p.type2 = {4, 5};
  p.type3 = {3};
  const auto paths = profile_paths(n, delta, p);
  Graph g = add_loops(build_from_profile(n, delta, p));
  for (const VertexSet& path : paths) {
    const SwitchMove m{MoveKind::Op2, path};
    const MonotoneCheck c = op2_monotone_check(g, m);
    EXPECT_TRUE(c.holds);
    EXPECT_GE(c.rho_after, c.rho_before - 1e-9);
    g = apply(g, m);
  }
  const QuotientSpec q = quotient(g, op2_result_partition(n, 0, paths[0], paths[1]));
  EXPECT_TRUE(q.equitable);
  const IntMatrix b = named_quotient(QuotientKind::B_n5, static_cast<long>(n)).matrix;
  EXPECT_EQ(q.matrix, to_rational(b + IntMatrix::identity(4) + IntMatrix::identity(4)));
}

TEST(Op2, FiveVertexBranch) {
  const std::size_t n = 19, delta = n - 5;
  ComplementProfile p;
  p.type2 = {3, 4};
  p.type3 = {7};
  const auto paths = profile_paths(n, delta, p);
  ASSERT_EQ(paths[0].size(), 5u);
  const Graph g = add_loops(build_from_profile(n, delta, p));
  EXPECT_TRUE(op2_monotone_check(g, SwitchMove{MoveKind::Op2, paths[0]}).holds);
}

TEST(Op3, DegreeAudit) {
  ComplementProfile p;
  p.type2 = {2};
  const Graph g = build_case2(12, 5, 3, p);
  const Graph after = apply(g, SwitchMove{MoveKind::Op3, {0, 1, 6, 7}});
  EXPECT_EQ(after.degree(0), g.degree(0) + 1);
  EXPECT_EQ(after.degree(1), g.degree(1) + 1);
  EXPECT_EQ(after.degree(6), 9u);
  EXPECT_EQ(after.degree(7), 9u);
}

TEST(Case2, Audits) {
  const Case2Audit dd = case2_inequality_audit(instance({FamilyTag::Gdd, 12, 4, {}}).graph);
  EXPECT_TRUE(dd.spread.holds);
  const Case2Audit d1 = case2_inequality_audit(instance({FamilyTag::Gd1, 12, 3, {}}).graph);
  EXPECT_TRUE(d1.degree_gap.holds);
  EXPECT_TRUE(d1.asserted_hold());
  EXPECT_THROW(case2_inequality_audit(build_G(7, 4)), InputError);
}
