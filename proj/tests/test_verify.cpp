#include <gtest/gtest.h>

#include <random>

#include "maxrho/perron.hpp"
#include "maxrho/verify.hpp"

using namespace maxrho;

namespace {

void expect_clean(const VerificationRun& run) {
  for (const Check& c : run.checks) EXPECT_TRUE(c.pass) << run.suite << ": " << c.name << " " << c.detail.dump();
  EXPECT_TRUE(run.passed());
  EXPECT_FALSE(run.checks.empty());
}

const Check* find(const VerificationRun& run, const std::string& name) {
  for (const Check& c : run.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Verify, RunBookkeeping) {
  VerificationRun run;
  run.suite = "demo";
  run.add("a", true);
  run.add("b", false, Json{{"why", "x"}});
  VerificationRun other;
  other.add("c", false);
  run.absorb(other);
  EXPECT_EQ(run.failures(), 2u);
  EXPECT_FALSE(run.passed());
  const Json j = run.to_json();
  EXPECT_EQ(j["total"], 3);
  EXPECT_EQ(j["failures"], 2);
  EXPECT_EQ(j["passed"], false);
}

TEST(Verify, SignsAt59) {
  const VerificationRun run = verify_signs(59, 59);
  expect_clean(run);
  const Check* c = find(run, "g(t3)>0@n=59");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->detail["value"], "278");
}

TEST(Verify, SignsWithExpansions) {
  expect_clean(verify_signs(98, 103));
  EXPECT_THROW(verify_signs(40, 60), InputError);
}

TEST(Verify, FormulasSmallRange) { expect_clean(verify_formulas(8, 30)); }

TEST(Verify, TheoremN2) { expect_clean(verify_theorem_n2(5, 7)); }

TEST(Verify, TheoremN3Scope) {
  const VerificationRun run = verify_theorem_n3(59, 62);
  expect_clean(run);
  EXPECT_EQ(run.scope, "proof-step verification");
}

TEST(Verify, CompareFamiliesN9) {
  const FamilyTable t = compare_families(9);
  ASSERT_FALSE(t.rows_n2.empty());
  EXPECT_TRUE(t.rows_n3.empty());
  EXPECT_EQ(t.rows_n2.front().delta, 6);
  EXPECT_EQ(t.rows_n2.front().rank, 1u);
  expect_clean(t.run);
  const std::string csv = to_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,max_degree,family,delta,rho,rank");
}

TEST(Verify, CompareFamiliesN60AndN61) {
  const FamilyTable even = compare_families(60);
  expect_clean(even.run);
  EXPECT_EQ(even.rows_n3.front().family, "B1");
  const FamilyTable odd = compare_families(61);
  expect_clean(odd.run);
  EXPECT_EQ(odd.rows_n3.front().family, "B2");
  EXPECT_NEAR(odd.rows_n3.front().rho, perron(build_H2(61)).rho, 1e-9);
}

TEST(Verify, Lemmas) { expect_clean(verify_lemmas(100, 7)); }

TEST(Verify, EquitableSmallRange) { expect_clean(verify_equitable(8, 16)); }

TEST(Verify, Switching) { expect_clean(verify_switching(100, 5)); }

TEST(Verify, SandwichExamples) {
  expect_clean(verify_sandwich(60, 5, default_profile(60, 5, 1)));
  expect_clean(verify_sandwich(100, 7, default_profile(100, 7, 2)));
  expect_clean(verify_sandwich(59, 4, default_profile(59, 4, 1)));
  EXPECT_THROW(verify_sandwich(59, 3, default_profile(59, 3, 1)), InputError);
}

TEST(Verify, SandwichGridCoversTenProfiles) {
  const VerificationRun run = verify_sandwich_grid();
  expect_clean(run);
  EXPECT_GE(run.checks.size(), 30u);
}

TEST(Verify, DeterministicJson) {
  EXPECT_EQ(verify_lemmas(50, 3).to_json().dump(), verify_lemmas(50, 3).to_json().dump());
  EXPECT_EQ(verify_switching(20, 3).to_json().dump(), verify_switching(20, 3).to_json().dump());
}

TEST(Verify, RandomConnectedGraph) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_connected_graph(rng, 2, 10);
    EXPECT_TRUE(is_connected(g));
    EXPECT_GE(g.order(), 2u);
    EXPECT_LE(g.order(), 10u);
  }
}
