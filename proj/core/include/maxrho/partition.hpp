#pragma once

#include <vector>

#include "maxrho/graph.hpp"
#include "maxrho/matrix.hpp"

namespace maxrho {

/// Ordered cells covering 0..n-1 exactly once, none empty. Cell order is kept
/// as given so quotient matrices come out in the caller's block order.
class Partition {
 public:
  Partition(std::size_t n, std::vector<VertexSet> cells);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return cells_.size(); }
  const std::vector<VertexSet>& cells() const noexcept { return cells_; }
  const VertexSet& cell(std::size_t i) const { return cells_.at(i); }
  /// vertex -> index of its cell
  std::size_t cell_of(Vertex v) const { return owner_.at(v); }

  static Partition discrete(std::size_t n);
  static Partition trivial(std::size_t n);

 private:
  std::size_t n_;
  std::vector<VertexSet> cells_;
  std::vector<std::size_t> owner_;
};

struct QuotientSpec {
  RatMatrix matrix;
  bool equitable = false;
};

/// Average block row sums; a loop counts 2 toward its own cell.
QuotientSpec quotient(const Graph& g, const Partition& p);

/// Largest eigenvalue of a quotient matrix via its characteristic polynomial.
double quotient_rho(const RatMatrix& b);

struct QuotientBoundReport {
  double rho_graph = 0.0;
  double rho_quotient = 0.0;
  bool equitable = false;
  bool holds = false;
};

/// rho(G) >= rho(B), with equality (to 1e-9) when the partition is equitable.
QuotientBoundReport quotient_bound_check(const Graph& g, const Partition& p);

struct LoopShiftReport {
  double rho_graph = 0.0;
  double rho_loop_graph = 0.0;
  bool loop_partition_equitable = false;
  bool matrix_shift_exact = false;
  bool holds = false;
};

/// Adds a loop at every vertex and checks B becomes B + 2I and rho grows by 2.
/// Throws InputError if p is not equitable for g.
LoopShiftReport loop_shift_check(const Graph& g, const Partition& p);

}  // namespace maxrho
