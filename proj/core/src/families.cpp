#include "maxrho/families.hpp"

#include <numeric>
#include <string>

#include "maxrho/charpoly.hpp"
#include "maxrho/error.hpp"

namespace maxrho {

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

VertexSet range(std::size_t lo, std::size_t hi) {
  VertexSet s;
  for (std::size_t v = lo; v < hi; ++v) s.push_back(static_cast<Vertex>(v));
  return s;
}

void join(GraphBuilder& b, const VertexSet& a, const VertexSet& c) {
  for (Vertex x : a)
    for (Vertex y : c) b.add_edge(x, y);
}

void clique(GraphBuilder& b, const VertexSet& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) b.add_edge(a[i], a[j]);
}

// K_m minus the matching {(a0,a1),(a2,a3),...}.
void clique_minus_matching(GraphBuilder& b, const VertexSet& a) {
  clique(b, a);
  for (std::size_t i = 0; i + 1 < a.size(); i += 2) b.remove_edge(a[i], a[i + 1]);
}

// Low vertices first in the check list, everything else must have degree high.
void expect_degrees(const Graph& g, const std::vector<std::pair<Vertex, std::size_t>>& low, std::size_t high,
                    const char* family) {
  std::vector<bool> seen(g.order(), false);
  for (auto [v, d] : low) {
    seen[v] = true;
    if (g.degree(v) != d) throw PropertyViolation(std::string(family) + ": wrong degree at vertex " + str(v));
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[v] && g.degree(v) != high)
      throw PropertyViolation(std::string(family) + ": wrong degree at vertex " + str(v));
}

void check_profile(const ComplementProfile& p, std::size_t inner, std::size_t outer) {
  for (std::size_t k : p.type2)
    if (k == 0) throw InputError("profile: a path needs at least one inner vertex");
  for (std::size_t c : p.type3)
    if (c < 3) throw InputError("profile: cycle of length " + str(c) + " is shorter than 3");
  if (p.outer_vertices() != outer)
    throw InputError("profile: 2(type1 + paths) = " + str(p.outer_vertices()) + " but the outer block has " +
                     str(outer) + " vertices");
  if (p.inner_vertices() != inner)
    throw InputError("profile: path interiors plus cycles cover " + str(p.inner_vertices()) +
                     " vertices but the inner block has " + str(inner));
}

// Removes the complement components from a graph that is complete on
// inner + outer. Returns the vertex sequence of each path.
std::vector<VertexSet> carve(GraphBuilder* b, const ComplementProfile& p, Vertex inner0, Vertex outer0) {
  std::vector<VertexSet> paths;
  Vertex in = inner0;
  Vertex out = outer0;
  for (std::size_t k : p.type2) {
    VertexSet path{out};
    for (std::size_t i = 0; i < k; ++i) path.push_back(in++);
    path.push_back(out + 1);
    out += 2;
    if (b)
      for (std::size_t i = 0; i + 1 < path.size(); ++i) b->remove_edge(path[i], path[i + 1]);
    paths.push_back(std::move(path));
  }
  for (std::size_t c : p.type3) {
    if (b)
      for (std::size_t i = 0; i < c; ++i) b->remove_edge(in + i, in + (i + 1) % c);
    in += static_cast<Vertex>(c);
  }
  for (std::size_t i = 0; i < p.type1; ++i) {
    if (b) b->remove_edge(out, out + 1);
    out += 2;
  }
  return paths;
}

void check_case2(std::size_t n, std::size_t du, std::size_t dv) {
  if (n < 7) throw InputError("case2: n must be at least 7");
  if (dv < 1 || du < dv || du + 4 > n)
    throw InputError("case2: need 1 <= dv <= du <= n-4, got du=" + str(du) + ", dv=" + str(dv));
  if ((du - dv) % 2 != 0) throw InputError("case2: du - dv must be even");
}

}  // namespace

std::size_t ComplementProfile::inner_vertices() const {
  return std::accumulate(type2.begin(), type2.end(), std::size_t{0}) +
         std::accumulate(type3.begin(), type3.end(), std::size_t{0});
}

Graph build_G(std::size_t n, std::size_t t) {
  if (n < 5) throw InputError("build_G: n must be at least 5");
  if (t % 2 != 0 || t < 2 || t + 3 > n) throw InputError("build_G: t must be even with 2 <= t <= n-3");
  GraphBuilder b(n);
  const VertexSet left = range(1, t + 1);
  const VertexSet right = range(t + 1, n);
  join(b, {0}, left);
  clique_minus_matching(b, left);
  clique(b, right);
  join(b, left, right);
  Graph g = std::move(b).build();
  expect_degrees(g, {{0, t}}, n - 2, "build_G");
  return g;
}

Graph build_H1(std::size_t n) {
  if (n < 8 || n % 2 != 0) throw InputError("build_H1: n must be even and at least 8");
  GraphBuilder b(n);
  const VertexSet outer = range(4, n);
  b.add_edge(0, 1);
  b.add_edge(2, 3);
  join(b, {1}, outer);
  join(b, {2, 3}, outer);
  clique_minus_matching(b, outer);
  Graph g = std::move(b).build();
  expect_degrees(g, {{0, 1}}, n - 3, "build_H1");
  return g;
}

Graph build_H2(std::size_t n) {
  if (n < 9 || n % 2 == 0) throw InputError("build_H2: n must be odd and at least 9");
  GraphBuilder b(n);
  const VertexSet rest = range(7, n);
  join(b, {0}, {1, 2});
  b.add_edge(1, 2);
  clique(b, {3, 4, 5, 6});
  join(b, {2}, {3, 4});
  join(b, {1}, {5, 6});
  join(b, range(1, 7), rest);
  clique_minus_matching(b, rest);
  Graph g = std::move(b).build();
  expect_degrees(g, {{0, 2}}, n - 3, "build_H2");
  return g;
}

Graph build_G2_1(std::size_t n) {
  if (n < 9 || n % 2 == 0) throw InputError("build_G2_1: n must be odd and at least 9");
  GraphBuilder b(n);
  const VertexSet rest = range(5, n);
  join(b, {0}, {1, 2});
  b.add_edge(1, 4);
  b.add_edge(2, 3);
  b.add_edge(3, 4);
  join(b, range(1, 5), rest);
  clique_minus_matching(b, rest);
  Graph g = std::move(b).build();
  expect_degrees(g, {{0, 2}}, n - 3, "build_G2_1");
  return g;
}

Graph build_from_profile(std::size_t n, std::size_t delta, const ComplementProfile& profile) {
  if (n < 5) throw InputError("build_from_profile: n must be at least 5");
  if (delta < 1 || delta + 3 > n) throw InputError("build_from_profile: need 1 <= delta <= n-3");
  check_profile(profile, delta, n - delta - 1);
  if (3 * profile.type2.size() > n - 1) throw InputError("build_from_profile: more than (n-1)/3 paths");
  GraphBuilder b(n);
  join(b, {0}, range(1, delta + 1));
  clique(b, range(1, n));
  carve(&b, profile, 1, static_cast<Vertex>(delta + 1));
  Graph g = std::move(b).build();
  expect_degrees(g, {{0, delta}}, n - 3, "build_from_profile");
  return g;
}

std::vector<VertexSet> profile_paths(std::size_t n, std::size_t delta, const ComplementProfile& profile) {
  check_profile(profile, delta, n - delta - 1);
  return carve(nullptr, profile, 1, static_cast<Vertex>(delta + 1));
}

Graph build_case2(std::size_t n, std::size_t du, std::size_t dv, const ComplementProfile& profile) {
  check_case2(n, du, dv);
  check_profile(profile, dv - 1, du - dv);
  GraphBuilder b(n);
  b.add_edge(0, 1);
  join(b, {0}, range(2, du + 1));
  join(b, {1}, range(2, dv + 1));
  clique(b, range(2, n));
  carve(&b, profile, 2, static_cast<Vertex>(dv + 1));
  Graph g = std::move(b).build();
  expect_degrees(g, {{0, du}, {1, dv}}, n - 3, "build_case2");
  return g;
}

std::vector<VertexSet> case2_paths(std::size_t n, std::size_t du, std::size_t dv, const ComplementProfile& profile) {
  check_case2(n, du, dv);
  check_profile(profile, dv - 1, du - dv);
  return carve(nullptr, profile, 2, static_cast<Vertex>(dv + 1));
}

ComplementProfile default_profile(std::size_t n, std::size_t delta, std::size_t paths) {
  if (delta + 3 > n || (n - delta - 1) % 2 != 0)
    throw InputError("default_profile: n - delta - 1 must be even and positive");
  const std::size_t outer_pairs = (n - delta - 1) / 2;
  if (paths > outer_pairs || paths > delta) throw InputError("default_profile: too many paths");
  ComplementProfile p;
  p.type1 = outer_pairs - paths;
  if (paths == 0) {
    if (delta < 3) throw InputError("default_profile: a cycle needs delta >= 3");
    p.type3 = {delta};
    return p;
  }
  p.type2.assign(paths, 1);
  p.type2.back() = delta - (paths - 1);
  return p;
}

std::string to_string(QuotientKind k) {
  switch (k) {
    case QuotientKind::A_delta: return "A_delta";
    case QuotientKind::B1: return "B1";
    case QuotientKind::B2: return "B2";
    case QuotientKind::B_delta: return "B_delta";
    case QuotientKind::B_n5: return "B_n5";
    case QuotientKind::B_dd: return "B_dd";
    case QuotientKind::B_d1: return "B_d1";
  }
  return "?";
}

QuotientKind quotient_kind_from_string(const std::string& s) {
  for (auto k : {QuotientKind::A_delta, QuotientKind::B1, QuotientKind::B2, QuotientKind::B_delta, QuotientKind::B_n5,
                 QuotientKind::B_dd, QuotientKind::B_d1})
    if (to_string(k) == s) return k;
  throw InputError("unknown quotient '" + s + "'");
}

bool admissible(QuotientKind which, long n, long d) {
  switch (which) {
    case QuotientKind::A_delta: return n >= 5 && d >= 2 && d <= n - 3;
    case QuotientKind::B1: return n >= 8;
    case QuotientKind::B2: return n >= 9;
    case QuotientKind::B_delta: return n >= 8 && d >= 3 && d <= n - 5;
    case QuotientKind::B_n5: return n >= 10;
    case QuotientKind::B_dd: return n >= 8 && d >= 4 && d <= n - 4;
    case QuotientKind::B_d1: return n >= 7 && d >= 3 && d <= n - 4;
  }
  return false;
}

IntPolynomial closed_form(QuotientKind which, long n, long d) {
  switch (which) {
    case QuotientKind::A_delta: return int_poly({-(d * d + 2 * d - n * d), 4 - 2 * n, 4 - n, 1});
    case QuotientKind::B1: return int_poly({n - 2, 2 * n - 9, 5 - 2 * n, 5 - n, 1});
    case QuotientKind::B2: return int_poly({2 * n - 2, 3 * n - 17, 5 - 2 * n, 5 - n, 1});
    case QuotientKind::B_delta: return int_poly({-d * d + (n - 3) * d, 9 - 3 * n, 6 - n, 1});
    case QuotientKind::B_n5: return int_poly({5 * n - 17, 3 * n - 18, 8 - 3 * n, 6 - n, 1});
    case QuotientKind::B_dd: return int_poly({-2 * d * d + (2 * n - 4) * d + n - 3, 3 - 2 * n, 5 - n, 1});
    case QuotientKind::B_d1: return int_poly({-d + 2 * n - 5, -d * d + d * n - d - 3, 5 - 2 * n, 5 - n, 1});
  }
  throw InputError("closed_form: unknown quotient");
}

namespace {

IntMatrix quotient_matrix(QuotientKind which, long n, long d) {
  using M = IntMatrix;
  auto z = [](long x) { return mpz_class(x); };
  switch (which) {
    case QuotientKind::A_delta:
      return M{{z(0), z(d), z(0)}, {z(1), z(d - 2), z(n - d - 1)}, {z(0), z(d), z(n - d - 2)}};
    case QuotientKind::B1:
      return M{{z(0), z(1), z(0), z(0)},
               {z(1), z(0), z(0), z(n - 4)},
               {z(0), z(0), z(1), z(n - 4)},
               {z(0), z(1), z(2), z(n - 6)}};
    case QuotientKind::B2:
      return M{{z(0), z(2), z(0), z(0)},
               {z(1), z(1), z(2), z(n - 7)},
               {z(0), z(1), z(3), z(n - 7)},
               {z(0), z(2), z(4), z(n - 9)}};
    case QuotientKind::B_delta:
      return M{{z(0), z(d), z(0)}, {z(1), z(d - 3), z(n - d - 1)}, {z(0), z(d), z(n - d - 3)}};
    case QuotientKind::B_n5:
      return M{{z(0), z(n - 7), z(2), z(0)},
               {z(1), z(n - 10), z(2), z(4)},
               {z(1), z(n - 7), z(1), z(2)},
               {z(0), z(n - 7), z(1), z(3)}};
    case QuotientKind::B_dd:
      return M{{z(1), z(d - 1), z(0)}, {z(2), z(d - 4), z(n - d - 1)}, {z(0), z(d - 1), z(n - d - 2)}};
    case QuotientKind::B_d1:
      return M{{z(0), z(1), z(0), z(0)},
               {z(1), z(0), z(d - 1), z(0)},
               {z(0), z(1), z(d - 3), z(n - d - 1)},
               {z(0), z(0), z(d - 1), z(n - d - 2)}};
  }
  throw InputError("quotient_matrix: unknown quotient");
}

IntMatrix g21_matrix(long n) {
  auto z = [](long x) { return mpz_class(x); };
  return IntMatrix{{z(0), z(2), z(0), z(0)},
                   {z(1), z(0), z(1), z(n - 5)},
                   {z(0), z(1), z(1), z(n - 5)},
                   {z(0), z(2), z(2), z(n - 7)}};
}

}  // namespace

NamedQuotient named_quotient(QuotientKind which, long n, long delta) {
  if (!admissible(which, n, delta))
    throw InputError("named_quotient: " + to_string(which) + " not defined at n=" + std::to_string(n) +
                     ", delta=" + std::to_string(delta));
  NamedQuotient q{which, n, delta, quotient_matrix(which, n, delta), closed_form(which, n, delta)};
  if (char_poly(q.matrix) != q.closed_form)
    throw PropertyViolation("named_quotient: characteristic polynomial of " + to_string(which) +
                            " differs from its closed form");
  return q;
}

std::string to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::G_nt: return "g";
    case FamilyTag::H1: return "h1";
    case FamilyTag::H2: return "h2";
    case FamilyTag::G2_1: return "g21";
    case FamilyTag::Gdelta_profile: return "profile";
    case FamilyTag::Gdd: return "gdd";
    case FamilyTag::Gd1: return "gd1";
  }
  return "?";
}

FamilyTag family_tag_from_string(const std::string& s) {
  for (auto t : {FamilyTag::G_nt, FamilyTag::H1, FamilyTag::H2, FamilyTag::G2_1, FamilyTag::Gdelta_profile,
                 FamilyTag::Gdd, FamilyTag::Gd1})
    if (to_string(t) == s) return t;
  throw InputError("unknown family '" + s + "'");
}

namespace {

std::size_t need_delta(const FamilyId& id) {
  if (!id.delta) throw InputError("family " + to_string(id.tag) + " needs delta");
  return *id.delta;
}

ComplementProfile case2_profile(const FamilyId& id, std::size_t du, std::size_t dv) {
  if (id.profile) return *id.profile;
  ComplementProfile p;
  p.type1 = (du - dv) / 2;
  if (dv > 1) p.type3 = {dv - 1};
  return p;
}

}  // namespace

FamilyInstance instance(const FamilyId& id) {
  const std::size_t n = id.n;
  const long ln = static_cast<long>(n);
  switch (id.tag) {
    case FamilyTag::G_nt: {
      const std::size_t t = need_delta(id);
      return {build_G(n, t), Partition(n, {{0}, range(1, t + 1), range(t + 1, n)}),
              quotient_matrix(QuotientKind::A_delta, ln, static_cast<long>(t))};
    }
    case FamilyTag::H1:
      return {build_H1(n), Partition(n, {{0}, {1}, {2, 3}, range(4, n)}), quotient_matrix(QuotientKind::B1, ln, 0)};
    case FamilyTag::H2:
      return {build_H2(n), Partition(n, {{0}, {1, 2}, {3, 4, 5, 6}, range(7, n)}),
              quotient_matrix(QuotientKind::B2, ln, 0)};
    case FamilyTag::G2_1:
      return {build_G2_1(n), Partition(n, {{0}, {1, 2}, {3, 4}, range(5, n)}), g21_matrix(ln)};
    case FamilyTag::Gdelta_profile: {
      const std::size_t d = need_delta(id);
      const ComplementProfile p = id.profile ? *id.profile : default_profile(n, d, 0);
      FamilyInstance f{build_from_profile(n, d, p), Partition(n, {{0}, range(1, d + 1), range(d + 1, n)}),
                       std::nullopt};
      if (p.type2.empty()) f.quotient = quotient_matrix(QuotientKind::B_delta, ln, static_cast<long>(d));
      return f;
    }
    case FamilyTag::Gdd: {
      const std::size_t d = need_delta(id);
      if (d < 4) throw InputError("family gdd needs delta >= 4");
      const ComplementProfile p = case2_profile(id, d, d);
      return {build_case2(n, d, d, p), Partition(n, {{0, 1}, range(2, d + 1), range(d + 1, n)}),
              quotient_matrix(QuotientKind::B_dd, ln, static_cast<long>(d))};
    }
    case FamilyTag::Gd1: {
      const std::size_t d = need_delta(id);
      if (d < 3 || d % 2 == 0) throw InputError("family gd1 needs odd delta >= 3");
      const ComplementProfile p = case2_profile(id, d, 1);
      return {build_case2(n, d, 1, p), Partition(n, {{1}, {0}, range(2, d + 1), range(d + 1, n)}),
              quotient_matrix(QuotientKind::B_d1, ln, static_cast<long>(d))};
    }
  }
  throw InputError("unknown family");
}

Graph build(const FamilyId& id) { return instance(id).graph; }

}  // namespace maxrho
