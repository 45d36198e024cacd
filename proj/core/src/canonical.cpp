#include "maxrho/canonical.hpp"

#include "maxrho/error.hpp"

namespace maxrho {

namespace {

class CodeSearch {
 public:
  CodeSearch(const SmallGraph& g, bool test_only) : g_(g), test_only_(test_only) {
    if (test_only_) {
      for (int k = 0; k < g_.n; ++k) {
        std::uint16_t c = 0;
        for (int i = 0; i < k; ++i) c = static_cast<std::uint16_t>((c << 1) | (g_.adjacent(i, k) ? 1U : 0U));
        best_[k] = c;
        label_.order[k] = k;
      }
      best_len_ = g_.n;
    }
  }

  void run() { dfs(0); }

  bool exceeded() const { return exceeded_; }

  CanonicalLabel label() const {
    CanonicalLabel out = label_;
    out.columns = best_;
    return out;
  }

 private:
  bool twins(int a, int b) const {
    const auto ra = static_cast<std::uint16_t>(g_.rows[a] & ~(1U << b));
    const auto rb = static_cast<std::uint16_t>(g_.rows[b] & ~(1U << a));
    return ra == rb;
  }

  void dfs(int k) {
    if (k == g_.n) {
      if (leaf_pending_) {
        for (int i = 0; i < g_.n; ++i) label_.order[i] = perm_[i];
        leaf_pending_ = false;
      }
      return;
    }
    std::array<std::uint16_t, 16> col{};
    std::uint16_t top = 0;
    for (int w = 0; w < g_.n; ++w) {
      if ((placed_ >> w) & 1U) continue;
      std::uint16_t c = 0;
      for (int i = 0; i < k; ++i) c = static_cast<std::uint16_t>((c << 1) | (g_.adjacent(perm_[i], w) ? 1U : 0U));
      col[w] = c;
      if (c > top) top = c;
    }
    if (k < best_len_) {
      if (top < best_[k]) return;
      if (top > best_[k]) {
        if (test_only_) {
          exceeded_ = true;
          return;
        }
        best_[k] = top;
        best_len_ = k + 1;
        leaf_pending_ = true;
      }
    } else {
      best_[k] = top;
      best_len_ = k + 1;
      leaf_pending_ = true;
    }

    std::array<int, 16> tried{};
    int ntried = 0;
    for (int w = 0; w < g_.n; ++w) {
      if (((placed_ >> w) & 1U) || col[w] != top) continue;
      bool skip = false;
      for (int t = 0; t < ntried && !skip; ++t) skip = twins(tried[t], w);
      if (skip) continue;
      tried[ntried++] = w;
      perm_[k] = w;
      placed_ = static_cast<std::uint16_t>(placed_ | (1U << w));
      dfs(k + 1);
      placed_ = static_cast<std::uint16_t>(placed_ & ~(1U << w));
      if (exceeded_) return;
    }
  }

  const SmallGraph& g_;
  bool test_only_;
  bool exceeded_ = false;
  bool leaf_pending_ = false;
  std::array<std::uint16_t, 16> best_{};
  int best_len_ = 0;
  std::array<int, 16> perm_{};
  std::uint16_t placed_ = 0;
  CanonicalLabel label_{};
};

}  // namespace

SmallGraph to_small(const Graph& g) {
  if (g.order() > 16) throw CapabilityError("small-graph form supports at most 16 vertices");
  if (g.has_loops()) throw InputError("small-graph form requires a loop-free graph");
  SmallGraph s;
  s.n = static_cast<int>(g.order());
  for (const auto& [u, v] : g.edges()) s.add_edge(static_cast<int>(u), static_cast<int>(v));
  return s;
}

Graph from_small(const SmallGraph& s) {
  GraphBuilder b(static_cast<std::size_t>(s.n));
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (s.adjacent(u, v)) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

CanonicalLabel max_code(const SmallGraph& g) {
  CodeSearch search(g, false);
  search.run();
  return search.label();
}

bool is_max_code(const SmallGraph& g) {
  CodeSearch search(g, true);
  search.run();
  return !search.exceeded();
}

std::string canonical_form(const Graph& g) {
  if (g.has_loops()) throw InputError("canonical_form: graph has loops");
  if (g.order() > static_cast<std::size_t>(kMaxCanonicalOrder))
    throw CapabilityError("canonical_form supports n <= 12, got n = " + std::to_string(g.order()));
  const SmallGraph s = to_small(g);
  const CanonicalLabel label = max_code(s);

  std::string out(1, static_cast<char>(s.n));
  unsigned acc = 0;
  int nbits = 0;
  for (int k = 1; k < s.n; ++k)
    for (int i = k - 1; i >= 0; --i) {
      acc = (acc << 1) | ((label.columns[k] >> i) & 1U);
      if (++nbits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
  return out;
}

}  // namespace maxrho
