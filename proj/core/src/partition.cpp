#include "maxrho/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "maxrho/charpoly.hpp"
#include "maxrho/error.hpp"
#include "maxrho/perron.hpp"
#include "maxrho/roots.hpp"

namespace maxrho {

namespace {
constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
constexpr double kRhoTol = 1e-9;
}  // namespace

Partition::Partition(std::size_t n, std::vector<VertexSet> cells)
    : n_(n), cells_(std::move(cells)), owner_(n, kUnassigned) {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].empty()) throw InputError("partition: cell " + std::to_string(i) + " is empty");
    for (Vertex v : cells_[i]) {
      if (v >= n_) throw InputError("partition: vertex " + std::to_string(v) + " out of range");
      if (owner_[v] != kUnassigned) throw InputError("partition: vertex " + std::to_string(v) + " in two cells");
      owner_[v] = i;
    }
  }
  for (std::size_t v = 0; v < n_; ++v)
    if (owner_[v] == kUnassigned) throw InputError("partition: vertex " + std::to_string(v) + " not covered");
}

Partition Partition::discrete(std::size_t n) {
  std::vector<VertexSet> cells(n);
  for (std::size_t v = 0; v < n; ++v) cells[v] = {static_cast<Vertex>(v)};
  return Partition(n, std::move(cells));
}

Partition Partition::trivial(std::size_t n) {
  VertexSet all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
  return Partition(n, {std::move(all)});
}

QuotientSpec quotient(const Graph& g, const Partition& p) {
  if (p.order() != g.order()) throw InputError("quotient: partition order differs from graph order");
  const std::size_t m = p.size();
  QuotientSpec out{RatMatrix(m), true};
  std::vector<long> counts(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<long> first;
    std::vector<mpz_class> sums(m, 0);
    for (Vertex v : p.cell(i)) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex w : g.neighbors(v)) ++counts[p.cell_of(w)];
      if (g.has_loop(v)) counts[i] += 2;
      if (first.empty())
        first = counts;
      else if (counts != first)
        out.equitable = false;
      for (std::size_t j = 0; j < m; ++j) sums[j] += counts[j];
    }
    const mpz_class size(static_cast<unsigned long>(p.cell(i).size()));
    for (std::size_t j = 0; j < m; ++j) {
      out.matrix(i, j) = mpq_class(sums[j], size);
      out.matrix(i, j).canonicalize();
    }
  }
  return out;
}

double quotient_rho(const RatMatrix& b) { return max_real_root(char_poly(b)); }

QuotientBoundReport quotient_bound_check(const Graph& g, const Partition& p) {
  const QuotientSpec q = quotient(g, p);
  QuotientBoundReport r;
  r.rho_graph = perron(g).rho;
  r.rho_quotient = quotient_rho(q.matrix);
  r.equitable = q.equitable;
  r.holds = r.rho_graph >= r.rho_quotient - kRhoTol;
  if (q.equitable) r.holds = r.holds && std::abs(r.rho_graph - r.rho_quotient) <= kRhoTol;
  return r;
}

LoopShiftReport loop_shift_check(const Graph& g, const Partition& p) {
  const QuotientSpec q = quotient(g, p);
  if (!q.equitable) throw InputError("loop_shift_check: partition is not equitable");
  const Graph looped = add_loops(g);
  const QuotientSpec ql = quotient(looped, p);
  LoopShiftReport r;
  r.loop_partition_equitable = ql.equitable;
  r.matrix_shift_exact = ql.matrix == q.matrix + RatMatrix::identity(p.size()) + RatMatrix::identity(p.size());
  r.rho_graph = perron(g).rho;
  r.rho_loop_graph = perron(looped).rho;
  r.holds = r.loop_partition_equitable && r.matrix_shift_exact &&
            std::abs(r.rho_loop_graph - r.rho_graph - 2.0) <= kRhoTol;
  return r;
}

}  // namespace maxrho
