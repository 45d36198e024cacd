#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxrho/graph.hpp"
#include "maxrho/matrix.hpp"
#include "maxrho/partition.hpp"
#include "maxrho/polynomial.hpp"

namespace maxrho {

/// Complement structure of G - S restricted to the vertices of degree Delta.
/// Inner vertices (neighbours of the low-degree vertices) have complement
/// degree 2, outer ones complement degree 1.
struct ComplementProfile {
  std::size_t type1 = 0;           ///< edges between two outer vertices
  std::vector<std::size_t> type2;  ///< paths: number of inner vertices on each (>= 1)
  std::vector<std::size_t> type3;  ///< cycles of inner vertices (each >= 3)

  std::size_t outer_vertices() const { return 2 * (type1 + type2.size()); }
  std::size_t inner_vertices() const;
  bool operator==(const ComplementProfile&) const = default;
};

/// u = 0 joined to a K_t minus matching on 1..t; a clique on t+1..n-1; the two
/// blocks completely joined. t even, 2 <= t <= n-3.
Graph build_G(std::size_t n, std::size_t t);

/// n even, n >= 8. u=0 pendant on v=1; {2,3} adjacent pair; 4..n-1 a
/// K_{n-4} minus matching, all joined to v and to {2,3}.
Graph build_H1(std::size_t n);

/// n odd, n >= 9. u=0 on adjacent v1=1, v2=2; {3,4,5,6} a K4 with {3,4} on v2
/// and {5,6} on v1; 7..n-1 a K_{n-7} minus matching joined to all but u.
Graph build_H2(std::size_t n);

/// n odd, n >= 9. u=0 on nonadjacent v1=1, v2=2; v3=3, v4=4 with v1v4, v2v3,
/// v3v4; 5..n-1 a K_{n-5} minus matching joined to v1..v4.
Graph build_G2_1(std::size_t n);

/// One low vertex u=0 of degree delta. Inner block 1..delta (path interiors
/// first, then cycles), outer block delta+1..n-1 (path ends in pairs first,
/// then type1 pairs). Path i runs from delta+1+2i through its interior to
/// delta+2+2i.
Graph build_from_profile(std::size_t n, std::size_t delta, const ComplementProfile& profile);

/// Two adjacent low vertices u=0 (degree du) and v=1 (degree dv). Common
/// neighbours 2..dv, then the du-dv vertices seen only by u, then the rest.
/// The profile describes the complement on the first two blocks.
Graph build_case2(std::size_t n, std::size_t du, std::size_t dv, const ComplementProfile& profile);

/// Vertex lists v1..vt of each path component, in profile order.
std::vector<VertexSet> profile_paths(std::size_t n, std::size_t delta, const ComplementProfile& profile);
std::vector<VertexSet> case2_paths(std::size_t n, std::size_t du, std::size_t dv, const ComplementProfile& profile);

/// Every inner vertex on one path, the remaining outer vertices matched.
ComplementProfile default_profile(std::size_t n, std::size_t delta, std::size_t paths);

enum class QuotientKind { A_delta, B1, B2, B_delta, B_n5, B_dd, B_d1 };

std::string to_string(QuotientKind k);
QuotientKind quotient_kind_from_string(const std::string& s);

struct NamedQuotient {
  QuotientKind which;
  long n = 0;
  long delta = 0;
  IntMatrix matrix;
  IntPolynomial closed_form;
};

/// Integer matrix and its closed-form characteristic polynomial. Throws
/// InputError outside the admissible range and PropertyViolation if the two
/// disagree.
NamedQuotient named_quotient(QuotientKind which, long n, long delta = 0);

/// Closed form only, no range check.
IntPolynomial closed_form(QuotientKind which, long n, long delta = 0);

/// Admissible (n, delta) ranges; delta ignored for B1, B2, B_n5.
bool admissible(QuotientKind which, long n, long delta = 0);

enum class FamilyTag { G_nt, H1, H2, G2_1, Gdelta_profile, Gdd, Gd1 };

std::string to_string(FamilyTag t);
FamilyTag family_tag_from_string(const std::string& s);

struct FamilyId {
  FamilyTag tag = FamilyTag::G_nt;
  std::size_t n = 0;
  std::optional<std::size_t> delta;
  std::optional<ComplementProfile> profile;
};

/// A family graph with its block partition and the integer matrix that
/// partition should produce (absent when the partition is not equitable).
struct FamilyInstance {
  Graph graph;
  Partition partition;
  std::optional<IntMatrix> quotient;
};

Graph build(const FamilyId& id);
FamilyInstance instance(const FamilyId& id);

}  // namespace maxrho
