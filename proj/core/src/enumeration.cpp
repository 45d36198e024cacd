#include "maxrho/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "maxrho/charpoly.hpp"
#include "maxrho/error.hpp"
#include "maxrho/graph6.hpp"
#include "maxrho/perron.hpp"
#include "maxrho/roots.hpp"

namespace maxrho {

namespace {

constexpr int kSplitDepth = 4;
constexpr double kTieTol = 1e-9;

struct Slot {
  int i, k;
};

std::vector<Slot> slots(int n) {
  std::vector<Slot> s;
  for (int k = 1; k < n; ++k)
    for (int i = 0; i < k; ++i) s.push_back({i, k});
  return s;
}

bool connected(const SmallGraph& g) {
  if (g.n <= 1) return true;
  unsigned seen = 1, frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (int v = 0; v < g.n; ++v)
      if ((frontier >> v) & 1U) next |= g.rows[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1U << g.n) - 1;
}

class Walker {
 public:
  Walker(const EnumSpec& spec, const EmitFn& emit) : spec_(spec), emit_(emit), slots_(slots(static_cast<int>(spec.n))) {
    g_.n = static_cast<int>(spec.n);
  }

  // Walks every canonical graph whose last edge slot lies before `from`'s
  // successors. With stop_at >= 0, graphs with stop_at edges are collected
  // into roots instead of being visited or expanded.
  void walk(SmallGraph& g, std::size_t from, int depth, int stop_at, std::vector<SmallGraph>* roots, bool emit) {
    if (depth == stop_at) {
      roots->push_back(g);
      return;
    }
    if (emit) visit(g);
    for (std::size_t p = from; p < slots_.size(); ++p) {
      const auto [i, k] = slots_[p];
      if (static_cast<std::size_t>(g.degree(i)) >= spec_.max_degree ||
          static_cast<std::size_t>(g.degree(k)) >= spec_.max_degree)
        continue;
      g.add_edge(i, k);
      if (is_max_code(g)) walk(g, p + 1, depth + 1, stop_at, roots, emit);
      g.rows[i] = static_cast<std::uint16_t>(g.rows[i] & ~(1U << k));
      g.rows[k] = static_cast<std::uint16_t>(g.rows[k] & ~(1U << i));
    }
  }

  std::size_t next_slot(const SmallGraph& g) const {
    for (std::size_t p = slots_.size(); p-- > 0;)
      if (g.adjacent(slots_[p].i, slots_[p].k)) return p + 1;
    return 0;
  }

  void visit(const SmallGraph& g) {
    if (accepts(spec_, g)) emit_(g);
  }

  const EnumSpec& spec_;
  const EmitFn& emit_;
  std::vector<Slot> slots_;
  SmallGraph g_;
};

void check_spec(const EnumSpec& spec) {
  if (spec.n < 1) throw InputError("enumerate: n must be positive");
  if (spec.n > kMaxEnumerationOrder)
    throw CapabilityError("enumerate: exhaustive mode supports n <= 9, got n = " + std::to_string(spec.n));
  if (spec.max_degree >= spec.n) throw InputError("enumerate: max degree must be below n");
}

}  // namespace

bool accepts(const EnumSpec& spec, const SmallGraph& g) {
  int lo = g.n, hi = 0;
  for (int v = 0; v < g.n; ++v) {
    lo = std::min(lo, g.degree(v));
    hi = std::max(hi, g.degree(v));
  }
  if (static_cast<std::size_t>(hi) != spec.max_degree) return false;
  if (spec.require_nonregular && lo == hi) return false;
  if (spec.require_connected && !connected(g)) return false;
  return true;
}

void enumerate(const EnumSpec& spec, const EmitFn& emit, std::size_t skip_roots, const RootDoneFn& done) {
  check_spec(spec);
  Walker w(spec, emit);
  // Root 0 is every graph with fewer than kSplitDepth edges; the graphs with
  // exactly kSplitDepth edges start roots 1, 2, ...
  std::vector<SmallGraph> roots;
  SmallGraph g = w.g_;
  w.walk(g, 0, 0, kSplitDepth, &roots, skip_roots == 0);
  if (skip_roots == 0 && done) done(1);
  for (std::size_t r = 0; r < roots.size(); ++r) {
    if (r + 1 < skip_roots) continue;
    SmallGraph h = roots[r];
    w.walk(h, w.next_slot(h), kSplitDepth, -1, nullptr, true);
    if (done) done(r + 2);
  }
}

std::vector<Graph> enumerate_all(const EnumSpec& spec) {
  std::vector<Graph> out;
  enumerate(spec, [&](const SmallGraph& g) { out.push_back(from_small(g)); });
  return out;
}

ExtremalReport extremal_search(const EnumSpec& spec, const std::optional<std::string>& checkpoint) {
  check_spec(spec);
  struct Candidate {
    double rho;
    std::string code;
  };
  std::vector<Candidate> cands;
  double best = -1.0;
  std::size_t total = 0;
  std::size_t skip = 0;

  using nlohmann::json;
  if (checkpoint && std::filesystem::exists(*checkpoint)) {
    std::ifstream in(*checkpoint);
    json j = json::parse(in);
    if (j.at("n") != spec.n || j.at("max_degree") != spec.max_degree ||
        j.at("require_connected") != spec.require_connected || j.at("require_nonregular") != spec.require_nonregular)
      throw InputError("extremal_search: checkpoint belongs to a different spec");
    skip = j.at("completed_roots");
    total = j.at("total_classes");
    best = j.at("rho_max");
    for (const auto& c : j.at("candidates")) cands.push_back({c.at("rho"), c.at("graph6")});
  }

  auto emit = [&](const SmallGraph& s) {
    ++total;
    const Graph g = from_small(s);
    const double rho = spec.require_connected ? perron(g).rho : spectral_radius(g);
    if (rho < best - kTieTol) return;
    if (rho > best) {
      best = rho;
      std::erase_if(cands, [&](const Candidate& c) { return c.rho < best - kTieTol; });
    }
    cands.push_back({rho, graph6_encode(g)});
  };
  auto save = [&](std::size_t completed) {
    if (!checkpoint) return;
    json j{{"n", spec.n},
           {"max_degree", spec.max_degree},
           {"require_connected", spec.require_connected},
           {"require_nonregular", spec.require_nonregular},
           {"completed_roots", completed},
           {"total_classes", total},
           {"rho_max", best},
           {"candidates", json::array()}};
    for (const auto& c : cands) j["candidates"].push_back({{"rho", c.rho}, {"graph6", c.code}});
    const std::string tmp = *checkpoint + ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, *checkpoint);
  };
  enumerate(spec, emit, skip, save);

  ExtremalReport rep;
  rep.total_classes = total;
  if (cands.empty()) return rep;
  // Exact pass: keep the classes whose largest eigenvalue ties the top one.
  std::vector<Graph> graphs;
  std::vector<IntPolynomial> polys;
  for (const auto& c : cands) {
    graphs.push_back(graph6_decode(c.code));
    polys.push_back(char_poly(adjacency_matrix(graphs.back())));
  }
  std::size_t top = 0;
  for (std::size_t i = 1; i < polys.size(); ++i)
    if (compare_max_roots(polys[i], polys[top]) > 0) top = i;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i != top && compare_max_roots(polys[i], polys[top]) != 0) continue;
    rep.maximizers.push_back(graphs[i]);
    rep.degree_sequences.push_back(degree_sequence(graphs[i]));
  }
  rep.rho_max = cands[top].rho;
  return rep;
}

StructureAudit structure_audit(const Graph& g) {
  const std::size_t delta = g.max_degree();
  StructureAudit a;
  VertexSet high;
  for (Vertex v = 0; v < g.order(); ++v) (g.degree(v) < delta ? a.low : high).push_back(v);
  const PerronPair p = perron(g);
  const auto& x = p.vector;

  a.low_is_clique = true;
  for (std::size_t i = 0; i < a.low.size(); ++i)
    for (std::size_t j = i + 1; j < a.low.size(); ++j)
      if (!g.adjacent(a.low[i], a.low[j])) a.low_is_clique = false;

  auto contained = [&](Vertex v, Vertex u) {
    for (Vertex w : high)
      if (g.adjacent(v, w) && !g.adjacent(u, w)) return false;
    return true;
  };
  a.neighbourhood_order = true;
  for (Vertex u : a.low)
    for (Vertex v : a.low) {
      if (u == v) continue;
      const bool smaller = x[v] <= x[u] + kTieTol;
      if (smaller != contained(v, u)) a.neighbourhood_order = false;
    }

  a.max_low_component = 0.0;
  for (Vertex v : a.low) a.max_low_component = std::max(a.max_low_component, x[v]);
  a.min_high_component = INFINITY;
  for (Vertex v : high) a.min_high_component = std::min(a.min_high_component, x[v]);
  a.low_below_high = a.low.empty() || high.empty() || a.max_low_component < a.min_high_component;
  return a;
}

}  // namespace maxrho
