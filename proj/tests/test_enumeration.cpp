#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "maxrho/canonical.hpp"
#include "maxrho/error.hpp"
#include "maxrho/families.hpp"
#include "maxrho/enumeration.hpp"
#include "maxrho/perron.hpp"

using namespace maxrho;

namespace {

std::size_t count_all(std::size_t n) {
  std::size_t count = 0;
  // Every labelled class with any maximum degree, no filters.
  for (std::size_t d = 0; d < n; ++d) {
    EnumSpec spec{n, d, false, false};
    enumerate(spec, [&](const SmallGraph&) { ++count; });
  }
  return count;
}

std::set<std::string> forms(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const Graph& g : gs) out.insert(canonical_form(g));
  return out;
}

}  // namespace

TEST(Enumerate, ClassCountsMatchKnownSequence) {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(count_all(n), expected[n - 1]) << n;
}

TEST(Enumerate, PathIsOnlyClassAtN4Delta2) {
  const auto gs = enumerate_all({4, 2});
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(canonical_form(gs[0]), canonical_form(build(4, {{0, 1}, {1, 2}, {2, 3}})));
}

TEST(Enumerate, FilterContract) {
  const auto gs = enumerate_all({5, 4});
  EXPECT_FALSE(gs.empty());
  const std::string star = canonical_form(build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  EXPECT_TRUE(forms(gs).count(star));
  for (const Graph& g : gs) {
    EXPECT_EQ(g.max_degree(), 4u);
    EXPECT_FALSE(is_regular(g));
    EXPECT_TRUE(is_connected(g));
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) sum += g.degree(v);
    EXPECT_EQ(sum % 2, 0u);
  }
  EXPECT_EQ(forms(gs).size(), gs.size());
}

TEST(Enumerate, ContainsG52) {
  EXPECT_TRUE(forms(enumerate_all({5, 3})).count(canonical_form(build_G(5, 2))));
}

TEST(Enumerate, DominatingVertexClasses) {
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto gs = enumerate_all({n, n - 1});
    EXPECT_FALSE(gs.empty());
    for (const Graph& g : gs) EXPECT_EQ(g.max_degree(), n - 1);
  }
}

TEST(Enumerate, EmitsMaxCodes) {
  enumerate({6, 3}, [](const SmallGraph& g) { EXPECT_TRUE(is_max_code(g)); });
}

TEST(Enumerate, Errors) {
  EXPECT_THROW(enumerate_all({10, 8}), CapabilityError);
  EXPECT_THROW(enumerate_all({5, 5}), InputError);
}

TEST(Enumerate, ResumeMatchesFullRun) {
  const EnumSpec spec{7, 4};
  std::vector<std::string> full;
  enumerate(spec, [&](const SmallGraph& g) { full.push_back(canonical_form(from_small(g))); });
  std::vector<std::string> first;
  std::size_t stop_after = 0;
  enumerate(spec, [&](const SmallGraph& g) { first.push_back(canonical_form(from_small(g))); }, 0,
            [&](std::size_t done) {
              if (stop_after == 0 && done == 3) stop_after = first.size();
            });
  ASSERT_GT(stop_after, 0u);
  std::vector<std::string> resumed(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(stop_after));
  enumerate(spec, [&](const SmallGraph& g) { resumed.push_back(canonical_form(from_small(g))); }, 3);
  EXPECT_EQ(resumed, full);
}

TEST(Extremal, N5) {
  const ExtremalReport r = extremal_search({5, 3});
  ASSERT_EQ(r.maximizers.size(), 1u);
  EXPECT_EQ(canonical_form(r.maximizers[0]), canonical_form(build_G(5, 2)));
  EXPECT_NEAR(r.rho_max, 2.8558, 1e-4);
}

TEST(Extremal, N6) {
  const ExtremalReport r = extremal_search({6, 4});
  ASSERT_EQ(r.maximizers.size(), 1u);
  EXPECT_EQ(canonical_form(r.maximizers[0]), canonical_form(build_G(6, 2)));
  EXPECT_NEAR(r.rho_max, perron(build_G(6, 2)).rho, 1e-9);
}

TEST(Extremal, N8Tie) {
  const ExtremalReport r = extremal_search({8, 6});
  EXPECT_EQ(forms(r.maximizers), (std::set<std::string>{canonical_form(build_G(8, 2)), canonical_form(build_G(8, 4))}));
  for (const auto& ds : r.degree_sequences) EXPECT_EQ(ds.back() < 6, true);
  EXPECT_NEAR(perron(build_G(8, 2)).rho, perron(build_G(8, 4)).rho, 1e-9);
}

TEST(Extremal, CheckpointResume) {
  const auto path = std::filesystem::temp_directory_path() / "maxrho_checkpoint_test.json";
  std::filesystem::remove(path);
  const EnumSpec spec{7, 5};
  const ExtremalReport a = extremal_search(spec, path.string());
  ASSERT_TRUE(std::filesystem::exists(path));
  const ExtremalReport b = extremal_search(spec, path.string());
  const ExtremalReport c = extremal_search(spec);
  EXPECT_EQ(forms(a.maximizers), forms(c.maximizers));
  EXPECT_EQ(forms(b.maximizers), forms(c.maximizers));
  EXPECT_EQ(a.total_classes, c.total_classes);
  EXPECT_EQ(b.total_classes, c.total_classes);
  std::filesystem::remove(path);
}

TEST(Extremal, CheckpointForOtherSpecRejected) {
  const auto path = std::filesystem::temp_directory_path() / "maxrho_checkpoint_mismatch.json";
  std::filesystem::remove(path);
  extremal_search({6, 4}, path.string());
  EXPECT_THROW(extremal_search({6, 3}, path.string()), InputError);
  std::filesystem::remove(path);
}

TEST(Audit, FamilyGraphs) {
  for (const Graph& g : {build_G(5, 2), build_G(8, 2)}) {
    const StructureAudit a = structure_audit(g);
    EXPECT_EQ(a.low.size(), 1u);
    EXPECT_TRUE(a.holds());
    EXPECT_LT(a.max_low_component, a.min_high_component);
  }
}
