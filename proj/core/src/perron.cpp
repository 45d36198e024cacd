#include "maxrho/perron.hpp"

#include <algorithm>
#include <cmath>

#include "maxrho/error.hpp"

namespace maxrho {

namespace {

struct AdjacencyLists {
  std::vector<std::vector<Vertex>> nbrs;
  std::vector<double> diag;

  explicit AdjacencyLists(const Graph& g) : nbrs(g.order()), diag(g.order(), 0.0) {
    for (Vertex v = 0; v < g.order(); ++v) {
      nbrs[v] = g.neighbors(v);
      if (g.has_loop(v)) diag[v] = 2.0;
    }
  }

  void multiply(std::span<const double> x, std::span<double> y) const {
    for (std::size_t v = 0; v < nbrs.size(); ++v) {
      double s = diag[v] * x[v];
      for (Vertex w : nbrs[v]) s += x[w];
      y[v] = s;
    }
  }
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

PerronPair perron(const Graph& g, double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-6)) throw InputError("perron: tolerance must lie in [1e-14, 1e-6]");
  if (!is_connected(g)) throw InputError("perron: graph is disconnected");

  const std::size_t n = g.order();
  const AdjacencyLists adj(g);
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  PerronPair out;
  double residual = 0.0;
  for (std::size_t it = 1; it <= kPerronIterationCap; ++it) {
    adj.multiply(x, y);
    const double rho = dot(x, y);
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - rho * x[i]));
    if (residual <= tol) {
      out.rho = rho;
      out.vector = std::move(x);
      out.residual = residual;
      out.iterations = it;
      return out;
    }
    // Shift by I so bipartite graphs (eigenvalue -rho) still converge.
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += x[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw NumericError("perron: no convergence within iteration cap", residual);
}

double spectral_radius(const Graph& g, double tol) {
  if (is_connected(g)) return perron(g, tol).rho;
  double best = 0.0;
  for (const VertexSet& c : components(g)) best = std::max(best, perron(induced(g, c), tol).rho);
  return best;
}

double rayleigh_quotient(const Graph& g, std::span<const double> y) {
  if (y.size() != g.order()) throw InputError("rayleigh_quotient: vector length mismatch");
  const AdjacencyLists adj(g);
  std::vector<double> ay(y.size());
  adj.multiply(y, ay);
  return dot(y, ay) / dot(y, y);
}

ComponentBound perron_component_bound(const Graph& g) {
  const PerronPair p = perron(g);
  const double xmax = *std::max_element(p.vector.begin(), p.vector.end());
  ComponentBound b;
  b.lhs = p.rho * xmax;
  b.rhs = std::sqrt(static_cast<double>(g.max_degree()));
  b.holds = b.lhs < b.rhs;
  return b;
}

}  // namespace maxrho
