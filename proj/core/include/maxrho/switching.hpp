#pragma once

#include <string>
#include <vector>

#include "maxrho/graph.hpp"
#include "maxrho/partition.hpp"

namespace maxrho {

enum class MoveKind { LS, Op1, Op2, Op3, Op4, Op5 };

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

/// Vertex roles per kind:
///   LS  (s, t, v, u): uv, st replaced by sv, tu
///   Op1, Op2 (v1, ..., vt): a path in the complement of a looped graph
///   Op3, Op4 (u, v, t1, t2)
///   Op5 (u, v, t1, t2, t3)
struct SwitchMove {
  MoveKind kind = MoveKind::LS;
  VertexSet vertices;
};

struct EdgeDelta {
  std::vector<Edge> added;
  std::vector<Edge> removed;
  VertexSet loops_added;
  VertexSet loops_removed;
};

/// The rewrite a move performs on g. Throws InputError naming the first
/// edge condition g does not meet.
EdgeDelta edge_delta(const Graph& g, const SwitchMove& m);
EdgeDelta inverse(const EdgeDelta& d);
Graph apply(const Graph& g, const EdgeDelta& d);
Graph apply(const Graph& g, const SwitchMove& m);

struct SwitchCertificate {
  double rho_before = 0.0;
  double rho_after = 0.0;
  double hypothesis_value = 0.0;  ///< (x_s - x_u)(x_v - x_t)
  bool hypothesis_holds = false;
  bool equality_case = false;  ///< x_s = x_u and x_v = x_t to 1e-8
  bool conclusion_holds = false;
};

/// Nonnegative hypothesis must give rho(G') >= rho(G) - 1e-9.
SwitchCertificate ls_certificate(const Graph& g, Vertex s, Vertex t, Vertex v, Vertex u);

struct SandwichCheck {
  double rho_source = 0.0;
  double rho_result = 0.0;
  double x_first = 0.0, x_second = 0.0, x_penultimate = 0.0, x_last = 0.0;
  bool lower_holds = false;  ///< rho(result) <= rho(source)
  bool upper_holds = false;  ///< rho(source) <= rho(result) + 2 (x1 - x2)^2
  bool symmetric = false;    ///< x1 = xt and x2 = x(t-1)
  bool holds() const { return lower_holds && upper_holds && symmetric; }
};

SandwichCheck op1_sandwich_check(const Graph& gloop, const SwitchMove& move);

struct MonotoneCheck {
  double rho_before = 0.0;
  double rho_after = 0.0;
  bool holds = false;
};

MonotoneCheck op2_monotone_check(const Graph& gloop, const SwitchMove& move);

/// After Op2 on two complement paths: {u}, the rest, the two second path
/// vertices, the four path ends.
Partition op2_result_partition(std::size_t n, Vertex u, const VertexSet& path1, const VertexSet& path2);

struct InequalitySides {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// u = the higher of the two low-degree vertices, v the other; m and M are
/// the least and largest Perron components over the remaining vertices.
struct Case2Audit {
  Vertex u = 0, v = 0;
  double lambda = 0.0, x_u = 0.0, x_v = 0.0, m = 0.0, big_m = 0.0;
  InequalitySides spread;       ///< (lambda+1)(M-m) <= 2M - (x_u + x_v)
  InequalitySides low_sum;      ///< x_u + x_v >= m^2 / M  (reported only)
  InequalitySides ratio;        ///< M/m < 1 + 1/(lambda-1) + 1/(lambda-1)^2  (reported only)
  InequalitySides degree_gap;   ///< (d_u - d_v) m <= (lambda+1)(x_u - x_v)
  bool asserted_hold() const { return spread.holds && degree_gap.holds; }
};

/// g must have exactly two vertices below the maximum degree.
Case2Audit case2_inequality_audit(const Graph& g);

}  // namespace maxrho
