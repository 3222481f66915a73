#include <gtest/gtest.h>

#include <filesystem>

#include "proxyvote/errors.hpp"
#include "proxyvote/forge.hpp"
#include "proxyvote/profile.hpp"
#include "proxyvote/profile_json.hpp"
#include "test_support.hpp"

using namespace proxyvote;

TEST(VoterTest, FromStrings) {
  const auto v = Voter::from_strings(7, "1011", "-0-1", 1);
  EXPECT_EQ(v.revealed_count(), 2u);
  EXPECT_EQ(v.revealed_vote(0), Vote::Unknown);
  EXPECT_EQ(v.revealed_vote(1), Vote::Reject);
  EXPECT_EQ(v.revealed_vote(3), Vote::Approve);
  EXPECT_EQ(v.threshold(), 0u);
  EXPECT_EQ(v.revealed_string(), "-0-1");
}

TEST(VoterTest, RevealedMustAgreeWithIntrinsic) {
  EXPECT_THROW(Voter::from_strings(1, "10", "0-"), ModelError);
  EXPECT_THROW(Voter::from_strings(1, "10", "1"), ModelError);
  EXPECT_THROW(Voter::from_strings(1, "10", "1?"), ModelError);
}

TEST(ProfileTest, ValidateRejectsBadProfiles) {
  Profile p;
  p.m = 2;
  EXPECT_THROW(p.validate(), ModelError);  // no voters
  p.voters.push_back(Voter::from_strings(1, "10", "1-"));
  EXPECT_NO_THROW(p.validate());

  auto dup = p;
  dup.voters.push_back(Voter::from_strings(1, "01", "-1"));
  EXPECT_THROW(dup.validate(), ModelError);

  auto hidden = p;
  hidden.voters.push_back(Voter::from_strings(2, "01", "--"));
  EXPECT_THROW(hidden.validate(), ModelError);

  auto reluctant = p;
  reluctant.voters[0].k = 2;
  EXPECT_THROW(reluctant.validate(), ModelError);

  auto weightless = p;
  weightless.voters[0].weight = 0;
  EXPECT_THROW(weightless.validate(), ModelError);
}

TEST(ProfileJsonTest, GoldenSerialization) {
  Profile p;
  p.m = 3;
  p.voters.push_back(Voter::from_strings(1, "101", "1-1", 1, 2));
  const std::string expected =
      "{\n"
      "  \"m\": 3,\n"
      "  \"voters\": [\n"
      "    {\n"
      "      \"id\": 1,\n"
      "      \"weight\": 2,\n"
      "      \"k\": 1,\n"
      "      \"intrinsic\": \"101\",\n"
      "      \"revealed\": \"1-1\"\n"
      "    }\n"
      "  ]\n"
      "}\n";
  EXPECT_EQ(serialize_profile(p), expected);
}

TEST(ProfileJsonTest, RoundTripIsByteStable) {
  testing_support::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto p = testing_support::random_profile(rng, rng.uniform(1, 6), rng.uniform(1, 9), 3,
                                                   false, 4);
    const auto text = serialize_profile(p);
    EXPECT_EQ(serialize_profile(parse_profile(text)), text);
  }
  const auto fixture = serialize_profile(gen_16_lower());
  EXPECT_EQ(serialize_profile(parse_profile(fixture)), fixture);
}

TEST(ProfileJsonTest, MalformedInput) {
  EXPECT_THROW(parse_profile("not json"), ModelError);
  EXPECT_THROW(parse_profile("{\"m\": 2}"), ModelError);
  EXPECT_THROW(parse_profile(R"({"m": 2, "voters": [{"id": 1, "weight": 1, "k": 0,
      "intrinsic": "10", "revealed": "0-"}]})"),
               ModelError);
}

TEST(ProfileJsonTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "proxyvote_profile_test.json";
  const auto p = gen_attraction_gap(4);
  write_profile(p, path);
  EXPECT_EQ(serialize_profile(read_profile(path)), serialize_profile(p));
  std::filesystem::remove(path);
  EXPECT_THROW(read_profile(path), ModelError);
}
