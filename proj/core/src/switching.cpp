#include "maxrho/switching.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "maxrho/error.hpp"
#include "maxrho/perron.hpp"

namespace maxrho {

namespace {

constexpr double kRhoTol = 1e-9;
constexpr double kComponentTol = 1e-8;

std::string edge_name(Vertex a, Vertex b) { return std::to_string(a) + "-" + std::to_string(b); }

void require_distinct(const VertexSet& vs) {
  std::set<Vertex> seen(vs.begin(), vs.end());
  if (seen.size() != vs.size()) throw InputError("switch: move vertices must be distinct");
}

void validate(const Graph& g, const EdgeDelta& d) {
  for (auto [a, b] : d.removed)
    if (!g.adjacent(a, b)) throw InputError("switch: edge " + edge_name(a, b) + " must be present");
  for (auto [a, b] : d.added)
    if (g.adjacent(a, b)) throw InputError("switch: edge " + edge_name(a, b) + " must be absent");
  for (Vertex v : d.loops_removed)
    if (!g.has_loop(v)) throw InputError("switch: loop at " + std::to_string(v) + " must be present");
  for (Vertex v : d.loops_added)
    if (g.has_loop(v)) throw InputError("switch: loop at " + std::to_string(v) + " must be absent");
}

void require_complement_path(const Graph& g, const VertexSet& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (g.adjacent(p[i], p[i + 1]))
      throw InputError("switch: " + edge_name(p[i], p[i + 1]) + " must be a complement path edge");
}

EdgeDelta op1(const VertexSet& p) {
  const std::size_t t = p.size();
  if (t == 3) return {{{p[0], p[1]}, {p[1], p[2]}}, {{p[0], p[2]}}, {}, {p[1]}};
  if (t == 4) return {{{p[0], p[1]}, {p[1], p[2]}, {p[2], p[3]}}, {{p[0], p[3]}}, {}, {p[1], p[2]}};
  return {{{p[0], p[1]}, {p[t - 2], p[t - 1]}}, {{p[0], p[t - 1]}, {p[1], p[t - 2]}}, {}, {}};
}

EdgeDelta op2(const VertexSet& p) {
  const std::size_t t = p.size();
  if (t == 4) return {{{p[1], p[2]}, {p[2], p[3]}}, {{p[1], p[3]}}, {}, {p[2]}};
  if (t == 5) return {{{p[1], p[2]}, {p[2], p[3]}, {p[3], p[4]}}, {{p[1], p[4]}}, {}, {p[2], p[3]}};
  return {{{p[1], p[2]}, {p[t - 2], p[t - 1]}}, {{p[2], p[t - 2]}, {p[1], p[t - 1]}}, {}, {}};
}

double lambda_of(const Graph& g) { return spectral_radius(g); }

}  // namespace

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::LS: return "LS";
    case MoveKind::Op1: return "Op1";
    case MoveKind::Op2: return "Op2";
    case MoveKind::Op3: return "Op3";
    case MoveKind::Op4: return "Op4";
    case MoveKind::Op5: return "Op5";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (auto k : {MoveKind::LS, MoveKind::Op1, MoveKind::Op2, MoveKind::Op3, MoveKind::Op4, MoveKind::Op5})
    if (to_string(k) == s) return k;
  throw InputError("unknown move kind '" + s + "'");
}

EdgeDelta edge_delta(const Graph& g, const SwitchMove& m) {
  const VertexSet& x = m.vertices;
  for (Vertex v : x)
    if (v >= g.order()) throw InputError("switch: vertex " + std::to_string(v) + " out of range");
  require_distinct(x);
  auto arity = [&](std::size_t k) {
    if (x.size() != k) throw InputError("switch: " + to_string(m.kind) + " takes " + std::to_string(k) + " vertices");
  };
  EdgeDelta d;
  switch (m.kind) {
    case MoveKind::LS: {
      arity(4);
      const Vertex s = x[0], t = x[1], v = x[2], u = x[3];
      d = {{{s, v}, {t, u}}, {{u, v}, {s, t}}, {}, {}};
      break;
    }
    case MoveKind::Op1:
      if (x.size() < 3) throw InputError("switch: Op1 needs a path of at least 3 vertices");
      require_complement_path(g, x);
      d = op1(x);
      break;
    case MoveKind::Op2:
      if (x.size() < 4) throw InputError("switch: Op2 needs a path of at least 4 vertices");
      require_complement_path(g, x);
      d = op2(x);
      break;
    case MoveKind::Op3:
      arity(4);
      d = {{{x[0], x[2]}, {x[1], x[3]}}, {{x[2], x[3]}}, {}, {}};
      break;
    case MoveKind::Op4:
      arity(4);
      d = {{{x[2], x[3]}}, {{x[1], x[2]}, {x[0], x[3]}}, {}, {}};
      break;
    case MoveKind::Op5:
      arity(5);
      d = {{{x[2], x[3]}, {x[0], x[4]}}, {{x[1], x[2]}, {x[3], x[4]}}, {}, {}};
      break;
  }
  validate(g, d);
  return d;
}

EdgeDelta inverse(const EdgeDelta& d) { return {d.removed, d.added, d.loops_removed, d.loops_added}; }

Graph apply(const Graph& g, const EdgeDelta& d) {
  validate(g, d);
  GraphBuilder b(g);
  for (auto [a, c] : d.removed) b.remove_edge(a, c);
  for (auto [a, c] : d.added) b.add_edge(a, c);
  for (Vertex v : d.loops_removed) b.set_loop(v, false);
  for (Vertex v : d.loops_added) b.set_loop(v, true);
  return std::move(b).build();
}

Graph apply(const Graph& g, const SwitchMove& m) { return apply(g, edge_delta(g, m)); }

SwitchCertificate ls_certificate(const Graph& g, Vertex s, Vertex t, Vertex v, Vertex u) {
  const Graph after = apply(g, SwitchMove{MoveKind::LS, {s, t, v, u}});
  const PerronPair p = perron(g);
  const auto& x = p.vector;
  SwitchCertificate c;
  c.rho_before = p.rho;
  c.rho_after = lambda_of(after);
  c.hypothesis_value = (x[s] - x[u]) * (x[v] - x[t]);
  c.hypothesis_holds = c.hypothesis_value >= -1e-12;
  c.equality_case = std::abs(x[s] - x[u]) <= kComponentTol && std::abs(x[v] - x[t]) <= kComponentTol;
  c.conclusion_holds = !c.hypothesis_holds || c.rho_after >= c.rho_before - kRhoTol;
  return c;
}

SandwichCheck op1_sandwich_check(const Graph& gloop, const SwitchMove& move) {
  if (move.kind != MoveKind::Op1) throw InputError("op1_sandwich_check: move must be Op1");
  const Graph after = apply(gloop, move);
  const PerronPair p = perron(gloop);
  const VertexSet& path = move.vertices;
  const std::size_t t = path.size();
  SandwichCheck c;
  c.rho_source = p.rho;
  c.rho_result = lambda_of(after);
  c.x_first = p.vector[path[0]];
  c.x_second = p.vector[path[1]];
  c.x_penultimate = p.vector[path[t - 2]];
  c.x_last = p.vector[path[t - 1]];
  const double gap = c.x_first - c.x_second;
  c.lower_holds = c.rho_result <= c.rho_source + kRhoTol;
  c.upper_holds = c.rho_source <= c.rho_result + 2 * gap * gap + kRhoTol;
  c.symmetric = std::abs(c.x_first - c.x_last) <= kComponentTol && std::abs(c.x_second - c.x_penultimate) <= kComponentTol;
  return c;
}

MonotoneCheck op2_monotone_check(const Graph& gloop, const SwitchMove& move) {
  if (move.kind != MoveKind::Op2) throw InputError("op2_monotone_check: move must be Op2");
  MonotoneCheck c;
  c.rho_before = lambda_of(gloop);
  c.rho_after = lambda_of(apply(gloop, move));
  c.holds = c.rho_after >= c.rho_before - kRhoTol;
  return c;
}

Partition op2_result_partition(std::size_t n, Vertex u, const VertexSet& path1, const VertexSet& path2) {
  if (path1.size() < 4 || path2.size() < 4) throw InputError("op2_result_partition: paths need 4 or more vertices");
  const VertexSet seconds{path1[1], path2[1]};
  const VertexSet ends{path1.front(), path1.back(), path2.front(), path2.back()};
  std::vector<bool> taken(n, false);
  taken.at(u) = true;
  for (Vertex w : seconds) taken.at(w) = true;
  for (Vertex w : ends) taken.at(w) = true;
  VertexSet rest;
  for (Vertex w = 0; w < n; ++w)
    if (!taken[w]) rest.push_back(w);
  return Partition(n, {{u}, rest, seconds, ends});
}

Case2Audit case2_inequality_audit(const Graph& g) {
  const std::size_t delta = g.max_degree();
  VertexSet low;
  for (Vertex w = 0; w < g.order(); ++w)
    if (g.degree(w) < delta) low.push_back(w);
  if (low.size() != 2) throw InputError("case2_inequality_audit: need exactly two vertices below the maximum degree");
  Case2Audit a;
  a.u = low[0];
  a.v = low[1];
  if (g.degree(a.v) > g.degree(a.u)) std::swap(a.u, a.v);
  const PerronPair p = perron(g);
  const auto& x = p.vector;
  a.lambda = p.rho;
  a.x_u = x[a.u];
  a.x_v = x[a.v];
  a.m = INFINITY;
  a.big_m = 0.0;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == a.u || w == a.v) continue;
    a.m = std::min(a.m, x[w]);
    a.big_m = std::max(a.big_m, x[w]);
  }
  const double lam = a.lambda;
  const double tol = 1e-12;
  a.spread = {(lam + 1) * (a.big_m - a.m), 2 * a.big_m - (a.x_u + a.x_v), false};
  a.spread.holds = a.spread.lhs <= a.spread.rhs + tol;
  a.low_sum = {a.x_u + a.x_v, a.m * a.m / a.big_m, false};
  a.low_sum.holds = a.low_sum.lhs >= a.low_sum.rhs - tol;
  a.ratio = {a.big_m / a.m, 1 + 1 / (lam - 1) + 1 / ((lam - 1) * (lam - 1)), false};
  a.ratio.holds = a.ratio.lhs < a.ratio.rhs;
  const double gap = static_cast<double>(g.degree(a.u) - g.degree(a.v));
  a.degree_gap = {gap * a.m, (lam + 1) * (a.x_u - a.x_v), false};
  a.degree_gap.holds = a.degree_gap.lhs <= a.degree_gap.rhs + tol;
  return a;
}

}  // namespace maxrho
