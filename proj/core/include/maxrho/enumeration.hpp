#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maxrho/canonical.hpp"
#include "maxrho/graph.hpp"

namespace maxrho {

inline constexpr std::size_t kMaxEnumerationOrder = 9;

struct EnumSpec {
  std::size_t n = 0;
  std::size_t max_degree = 0;
  bool require_connected = true;
  bool require_nonregular = true;
};

/// Graphs accepted by spec: maximum degree exactly spec.max_degree plus the
/// connectivity and regularity filters.
bool accepts(const EnumSpec& spec, const SmallGraph& g);

using EmitFn = std::function<void(const SmallGraph&)>;
using RootDoneFn = std::function<void(std::size_t completed_roots)>;

/// Orderly generation: one graph per isomorphism class, each in its maximum
/// code labelling, in a fixed order. The search tree is cut into roots (root 0
/// holds the shallow levels) so a run can resume after `skip_roots` finished
/// roots; `done` fires after each root with the count finished so far.
/// Throws CapabilityError for n > 9.
void enumerate(const EnumSpec& spec, const EmitFn& emit, std::size_t skip_roots = 0, const RootDoneFn& done = {});

std::vector<Graph> enumerate_all(const EnumSpec& spec);

struct ExtremalReport {
  std::vector<Graph> maximizers;  ///< canonical labelling, exact ties only
  double rho_max = 0.0;
  std::vector<std::vector<std::size_t>> degree_sequences;
  std::size_t total_classes = 0;
};

/// Maximum spectral radius over the classes enumerate() yields. Classes within
/// 1e-9 of the best are compared exactly through their characteristic
/// polynomials. With a checkpoint path, progress is saved after every root and
/// picked up again on the next call with the same spec.
ExtremalReport extremal_search(const EnumSpec& spec, const std::optional<std::string>& checkpoint = std::nullopt);

struct StructureAudit {
  VertexSet low;  ///< vertices below the maximum degree
  bool low_is_clique = false;
  bool neighbourhood_order = false;  ///< x_v <= x_u iff N_T(v) within N_T(u), all low pairs
  double max_low_component = 0.0;
  double min_high_component = 0.0;
  bool low_below_high = false;
  bool holds() const { return low_is_clique && neighbourhood_order && low_below_high; }
};

StructureAudit structure_audit(const Graph& g);

}  // namespace maxrho
