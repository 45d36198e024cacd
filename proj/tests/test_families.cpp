#include <gtest/gtest.h>

#include "maxrho/charpoly.hpp"
#include "maxrho/error.hpp"
#include "maxrho/families.hpp"
#include "maxrho/partition.hpp"
#include "maxrho/perron.hpp"
#include "maxrho/roots.hpp"

using namespace maxrho;

namespace {

std::vector<std::size_t> expected_degrees(std::size_t n, std::size_t high, std::vector<std::size_t> low) {
  std::vector<std::size_t> d(n - low.size(), high);
  d.insert(d.end(), low.begin(), low.end());
  return d;
}

void expect_quotient_matches(const FamilyInstance& inst) {
  ASSERT_TRUE(inst.quotient.has_value());
  const QuotientSpec q = quotient(inst.graph, inst.partition);
  EXPECT_TRUE(q.equitable);
  EXPECT_EQ(q.matrix, to_rational(*inst.quotient));
  EXPECT_NEAR(perron(inst.graph).rho, quotient_rho(q.matrix), 1e-9);
}

}  // namespace

TEST(BuildG, Degrees) {
  EXPECT_EQ(degree_sequence(build_G(5, 2)), expected_degrees(5, 3, {2}));
  EXPECT_EQ(degree_sequence(build_G(8, 4)), expected_degrees(8, 6, {4}));
  const Graph g = build_G(8, 4);
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(3, 4));
  EXPECT_TRUE(g.adjacent(1, 3));
}

TEST(BuildG, N6CoincidentCases) {
  EXPECT_EQ(build_G(6, 2), build_G(6, 6 - 4));
}

TEST(BuildG, RhoIsMaxRootOfF) {
  const IntPolynomial f = closed_form(QuotientKind::A_delta, 8, 4);
  EXPECT_EQ(f, int_poly({8, -12, -4, 1}));
  EXPECT_NEAR(perron(build_G(8, 4)).rho, max_real_root(f), 1e-9);
}

TEST(BuildG, RangeErrors) {
  EXPECT_THROW(build_G(8, 3), InputError);
  EXPECT_THROW(build_G(8, 0), InputError);
  EXPECT_THROW(build_G(8, 6), InputError);
  EXPECT_THROW(build_G(4, 2), InputError);
}

TEST(BuildH1, Structure) {
  EXPECT_EQ(degree_sequence(build_H1(8)), expected_degrees(8, 5, {1}));
  expect_quotient_matches(instance({FamilyTag::H1, 8, {}, {}}));
  const IntPolynomial f1 = int_poly({58, 111, -115, -55, 1});
  EXPECT_EQ(closed_form(QuotientKind::B1, 60), f1);
  EXPECT_NEAR(perron(build_H1(60)).rho, max_real_root(f1), 1e-9);
  EXPECT_THROW(build_H1(9), InputError);
  EXPECT_THROW(build_H1(6), InputError);
}

TEST(BuildH2, Structure) {
  EXPECT_EQ(degree_sequence(build_H2(11)), expected_degrees(11, 8, {2}));
  expect_quotient_matches(instance({FamilyTag::H2, 11, {}, {}}));
  const IntPolynomial f2 = int_poly({16, 10, -13, -4, 1});
  EXPECT_EQ(closed_form(QuotientKind::B2, 9), f2);
  EXPECT_NEAR(perron(build_H2(9)).rho, max_real_root(f2), 1e-9);
  EXPECT_THROW(build_H2(10), InputError);
  EXPECT_THROW(build_H2(7), InputError);
}

TEST(BuildG21, Structure) {
  const Graph g = build_G2_1(9);
  EXPECT_EQ(degree_sequence(g), expected_degrees(9, 6, {2}));
  expect_quotient_matches(instance({FamilyTag::G2_1, 9, {}, {}}));
  // Complement of G - u holds the path v3 - v1 - v2 - v4.
  EXPECT_FALSE(g.adjacent(1, 3));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(2, 4));
  EXPECT_TRUE(g.adjacent(3, 4));
  for (std::size_t n = 9; n <= 59; n += 2) EXPECT_LT(perron(build_G2_1(n)).rho, perron(build_H2(n)).rho) << n;
  EXPECT_THROW(build_G2_1(10), InputError);
}

TEST(BuildProfile, CycleProfile) {
  ComplementProfile p;
  p.type1 = 2;
  p.type3 = {4};
  const Graph g = build_from_profile(9, 4, p);
  EXPECT_EQ(degree_sequence(g), expected_degrees(9, 6, {4}));
  expect_quotient_matches(instance({FamilyTag::Gdelta_profile, 9, 4, p}));
}

TEST(BuildProfile, PathProfile) {
  ComplementProfile p;
  p.type1 = 1;
  p.type2 = {4};
  const Graph g = build_from_profile(9, 4, p);
  EXPECT_EQ(degree_sequence(g), expected_degrees(9, 6, {4}));
  const auto paths = profile_paths(9, 4, p);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], (VertexSet{5, 1, 2, 3, 4, 6}));
  for (std::size_t i = 0; i + 1 < paths[0].size(); ++i) EXPECT_FALSE(g.adjacent(paths[0][i], paths[0][i + 1]));
  EXPECT_FALSE(instance({FamilyTag::Gdelta_profile, 9, 4, p}).quotient.has_value());
}

TEST(BuildProfile, CountErrors) {
  ComplementProfile p;
  p.type1 = 1;
  p.type3 = {4};
  EXPECT_THROW(build_from_profile(9, 4, p), InputError);
  ComplementProfile q;
  q.type1 = 2;
  q.type3 = {3};
  EXPECT_THROW(build_from_profile(9, 4, q), InputError);
  ComplementProfile r;
  r.type1 = 2;
  r.type3 = {2, 2};
  EXPECT_THROW(build_from_profile(9, 4, r), InputError);
}

TEST(BuildProfile, BandHolds) {
  for (std::size_t n : {12u, 20u, 31u}) {
    for (std::size_t d = 3; d <= n - 5; ++d) {
      if ((n - d - 1) % 2 != 0) continue;
      for (std::size_t paths : {0u, 1u}) {
        if (paths == 0 && d < 3) continue;
        const Graph g = build_from_profile(n, d, default_profile(n, d, paths));
        const double rho = perron(g).rho;
        EXPECT_GT(rho, static_cast<double>(n) - 4.0);
        EXPECT_LT(rho, static_cast<double>(n) - 3.0);
      }
    }
  }
}

TEST(BuildCase2, DeltaDelta) {
  const FamilyInstance inst = instance({FamilyTag::Gdd, 10, 4, {}});
  EXPECT_EQ(degree_sequence(inst.graph), expected_degrees(10, 7, {4, 4}));
  expect_quotient_matches(inst);
}

TEST(BuildCase2, DeltaOne) {
  const FamilyInstance inst = instance({FamilyTag::Gd1, 10, 3, {}});
  EXPECT_EQ(degree_sequence(inst.graph), expected_degrees(10, 7, {3, 1}));
  expect_quotient_matches(inst);
}

TEST(BuildCase2, ParityError) {
  ComplementProfile p;
  p.type3 = {3};
  EXPECT_THROW(build_case2(10, 4, 3, p), InputError);
}

TEST(NamedQuotient, PrintedForms) {
  EXPECT_EQ(named_quotient(QuotientKind::A_delta, 7, 4).closed_form, int_poly({4, -10, -3, 1}));
  EXPECT_EQ(named_quotient(QuotientKind::B_n5, 59).closed_form, int_poly({278, 159, -169, -53, 1}));
  EXPECT_EQ(named_quotient(QuotientKind::B_dd, 10, 4).closed_form, int_poly({39, -17, -5, 1}));
}

TEST(NamedQuotient, GridMatchesCharPoly) {
  const QuotientKind kinds[] = {QuotientKind::A_delta, QuotientKind::B1,    QuotientKind::B2,  QuotientKind::B_delta,
                                QuotientKind::B_n5,    QuotientKind::B_dd, QuotientKind::B_d1};
  for (long n = 8; n <= 40; ++n)
    for (QuotientKind k : kinds)
      for (long d = 0; d <= n; ++d) {
        if (!admissible(k, n, d)) continue;
        const NamedQuotient q = named_quotient(k, n, d);
        EXPECT_EQ(char_poly(q.matrix), q.closed_form) << to_string(k) << " n=" << n << " d=" << d;
      }
}

TEST(NamedQuotient, RangeErrors) {
  EXPECT_THROW(named_quotient(QuotientKind::B1, 7), InputError);
  EXPECT_THROW(named_quotient(QuotientKind::B_delta, 20, 2), InputError);
  EXPECT_THROW(named_quotient(QuotientKind::B_n5, 9), InputError);
  EXPECT_THROW(quotient_kind_from_string("B9"), InputError);
}

TEST(NamedQuotient, DifferenceIdentities) {
  for (long n = 10; n <= 30; ++n) {
    EXPECT_EQ(closed_form(QuotientKind::B1, n) - closed_form(QuotientKind::B2, n), int_poly({-n, 8 - n}));
    for (long d1 = 2; d1 <= n - 3; ++d1)
      for (long d2 = 2; d2 <= n - 3; ++d2) {
        const IntPolynomial diff = closed_form(QuotientKind::A_delta, n, d2) - closed_form(QuotientKind::A_delta, n, d1);
        EXPECT_EQ(diff, int_poly({(d1 - d2) * (d1 + d2 - n + 2)}));
      }
  }
}

TEST(FamilyIds, StringsRoundTrip) {
  for (FamilyTag t : {FamilyTag::G_nt, FamilyTag::H1, FamilyTag::H2, FamilyTag::G2_1, FamilyTag::Gdelta_profile,
                      FamilyTag::Gdd, FamilyTag::Gd1})
    EXPECT_EQ(family_tag_from_string(to_string(t)), t);
  EXPECT_THROW(family_tag_from_string("h3"), InputError);
}
