#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "maxrho/families.hpp"
#include "maxrho/json_io.hpp"

namespace maxrho {

struct Check {
  std::string name;
  bool pass = false;
  Json detail;
};

/// Outcome of one suite. Serialises without timing so equal parameters give
/// byte-identical output.
struct VerificationRun {
  std::string suite;
  std::string scope;
  Json parameters = Json::object();
  std::vector<Check> checks;

  void add(std::string name, bool pass, Json detail = nullptr);
  void absorb(const VerificationRun& other);
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  Json to_json() const;
};

/// Connected graph on n_min..n_max vertices, edge probability drawn per graph.
Graph random_connected_graph(std::mt19937_64& rng, std::size_t n_min, std::size_t n_max);

/// Sign table of g = P(B_n5) and f2 = P(B2) at the four test points and at
/// n-3, plus the Laurent expansions for n >= 100.
VerificationRun verify_signs(long n_min, long n_max);

/// Closed forms of every named quotient and the difference identities.
VerificationRun verify_formulas(long n_min, long n_max);

struct FamilyRow {
  long n = 0;
  std::string family;
  std::optional<long> delta;
  double rho = 0.0;
  std::size_t rank = 0;
};

struct FamilyTable {
  long n = 0;
  std::vector<FamilyRow> rows_n2;  ///< maximum degree n-2, empty below n = 5
  std::vector<FamilyRow> rows_n3;  ///< maximum degree n-3, empty below n = 59
  VerificationRun run;
};

/// Quotient-level comparison at order n. Rows are sorted by rho, descending.
FamilyTable compare_families(long n, bool with_rows = true);
std::string to_csv(const FamilyTable& t);
Json to_json(const FamilyTable& t);

/// Exhaustive maximum degree n-2 search against the predicted maximizers.
VerificationRun verify_theorem_n2(long n_min, long n_max);

/// Quotient-level maximum degree n-3 comparisons, n >= 59.
VerificationRun verify_theorem_n3(long n_min, long n_max);

/// Perron component bound, quotient bound on random partitions and local
/// switching on seeded random graphs.
VerificationRun verify_lemmas(std::size_t trials, std::uint64_t seed);

/// Documented partitions of every family graph: equitable, matching quotient,
/// rho(G) = rho(B) and the loop shift.
VerificationRun verify_equitable(long n_min, long n_max);

/// Local switching sweep, the G2_1 -> H2 rewrite, Operation 1 and 2 checks
/// and the two-low-vertex audit.
VerificationRun verify_switching(std::size_t trials, std::uint64_t seed);

/// rho(B_delta) <= rho(G) < rho(B_delta) + 1/n^2 for one profile graph.
VerificationRun verify_sandwich(std::size_t n, std::size_t delta, const ComplementProfile& profile);

/// The sandwich on a fixed grid of path-bearing profiles with 59 <= n <= 120.
VerificationRun verify_sandwich_grid();

}  // namespace maxrho
