#include <gtest/gtest.h>

#include "maxrho/error.hpp"
#include "maxrho/families.hpp"
#include "maxrho/json_io.hpp"

using namespace maxrho;

TEST(JsonIo, ParseErrorOffset) {
  try {
    parse_json("{\"n\": 5,, }");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.offset(), 0u);
  }
  EXPECT_EQ(parse_json("[1, 2]").size(), 2u);
}

TEST(JsonIo, PartitionRoundTrip) {
  const Partition p(5, {{0}, {3, 4}, {1, 2}});
  const Json j = to_json(p);
  EXPECT_EQ(j, Json::parse("[[0],[3,4],[1,2]]"));
  const Partition q = partition_from_json(5, j);
  EXPECT_EQ(q.cells(), p.cells());
  EXPECT_THROW(partition_from_json(5, Json::parse("[[0],[1]]")), InputError);
  EXPECT_THROW(partition_from_json(5, Json::parse("{\"a\":1}")), InputError);
  EXPECT_THROW(partition_from_json(5, Json::parse("[[0,-1],[1,2,3,4]]")), InputError);
}

TEST(JsonIo, MatrixPairs) {
  RatMatrix m(2);
  m(0, 0) = mpq_class(1, 2);
  m(1, 1) = 3;
  EXPECT_EQ(to_json(m), Json::parse("[[[1,2],[0,1]],[[0,1],[3,1]]]"));
  IntMatrix big(1);
  big(0, 0) = mpz_class("1000000000000000000000000");
  EXPECT_EQ(to_json(big)[0][0][0], "1000000000000000000000000");
}

TEST(JsonIo, Polynomial) {
  EXPECT_EQ(to_json(int_poly({4, -10, -3, 1})), Json::parse("[4,-10,-3,1]"));
}

TEST(JsonIo, ProfileAndFamilyRoundTrip) {
  ComplementProfile p;
  p.type1 = 3;
  p.type2 = {2, 1};
  p.type3 = {6};
  EXPECT_EQ(profile_from_json(to_json(p)), p);
  const FamilyId id{FamilyTag::Gdelta_profile, 100, 9, p};
  const FamilyId back = family_id_from_json(to_json(id));
  EXPECT_EQ(back.tag, id.tag);
  EXPECT_EQ(back.n, id.n);
  EXPECT_EQ(back.delta, id.delta);
  EXPECT_EQ(back.profile, id.profile);
  EXPECT_THROW(family_id_from_json(Json::parse("{\"family\":\"h1\"}")), InputError);
  EXPECT_THROW(profile_from_json(Json::parse("{\"type1\":\"x\"}")), InputError);
}

TEST(JsonIo, MoveRoundTrip) {
  const SwitchMove m{MoveKind::Op5, {0, 1, 4, 5, 6}};
  const SwitchMove back = move_from_json(to_json(m));
  EXPECT_EQ(back.kind, m.kind);
  EXPECT_EQ(back.vertices, m.vertices);
  EXPECT_THROW(move_from_json(Json::parse("{\"kind\":\"Op7\",\"vertices\":[]}")), InputError);
}
