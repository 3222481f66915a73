#include <gtest/gtest.h>

#include "proxyvote/errors.hpp"
#include "proxyvote/forge.hpp"
#include "proxyvote/oracle.hpp"
#include "test_support.hpp"

using namespace proxyvote;
using testing_support::RefRule;
using testing_support::RefTie;
using testing_support::Rng;

namespace {

OracleOptions single_worker() {
  OracleOptions o;
  o.workers = 1;
  return o;
}

}  // namespace

TEST(OracleTest, SixteenLower) {
  const auto p = gen_16_lower();
  for (auto rule : {DelegationRule::NearestHamming, DelegationRule::FirstListed}) {
    const auto cert = brute_force_best(p, 1, TieBreak::IntrinsicBest, rule);
    EXPECT_EQ(cert.best_ratio, Ratio(8, 5));
    EXPECT_EQ(cert.best_winner_score, 5);
    EXPECT_EQ(cert.opt, 8);
  }
}

TEST(OracleTest, OmegaN) {
  const auto cert =
      brute_force_best(gen_omega_n(9), 1, TieBreak::IntrinsicBest, DelegationRule::NearestHamming);
  EXPECT_EQ(cert.best_winner_score, 2);
  EXPECT_EQ(cert.opt, 8);
  EXPECT_EQ(cert.best_ratio, Ratio(4, 1));
  EXPECT_EQ(cert.search_space, 513u);  // empty set plus 2^9 single types
}

TEST(OracleTest, TwoVoterRevealedBest) {
  for (auto rule : {DelegationRule::NearestHamming, DelegationRule::FirstListed}) {
    const auto cert = brute_force_best(gen_2eps_revealed(), 1, TieBreak::RevealedBest, rule);
    EXPECT_EQ(cert.best_ratio, Ratio(2, 1));
  }
}

TEST(OracleTest, LargeK) {
  const auto cert = brute_force_best(gen_large_k(4, 1), 1, TieBreak::IntrinsicBest,
                                     DelegationRule::NearestHamming);
  EXPECT_LE(cert.best_winner_score, 2);
}

TEST(OracleTest, WitnessReproducesRatio) {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    const auto p = testing_support::random_profile(rng, rng.uniform(1, 6), rng.uniform(1, 4), 2);
    for (auto rule : {DelegationRule::NearestHamming, DelegationRule::FirstListed}) {
      const auto cert = brute_force_best(p, 2, TieBreak::IntrinsicBest, rule, single_worker());
      const auto r = run_election(p, cert.witness, rule, TieBreak::IntrinsicBest);
      EXPECT_EQ(r.ratio, cert.best_ratio);
      EXPECT_EQ(r.winner, cert.winner);
    }
  }
}

TEST(OracleTest, MatchesOrderedEnumeration) {
  Rng rng(14);
  const std::pair<DelegationRule, RefRule> rules[] = {
      {DelegationRule::FirstListed, RefRule::FirstListed},
      {DelegationRule::NearestHamming, RefRule::Nearest}};
  const std::pair<TieBreak, RefTie> ties[] = {{TieBreak::IntrinsicBest, RefTie::IntrinsicBest},
                                              {TieBreak::RevealedBest, RefTie::RevealedBest}};
  for (int t = 0; t < 30; ++t) {
    const auto p = testing_support::random_profile(rng, rng.uniform(1, 6), rng.uniform(1, 3), 2);
    const auto lambda = rng.uniform(1, 2);
    for (auto [rule, ref_rule] : rules) {
      for (auto [tie, ref_tie] : ties) {
        const auto cert = brute_force_best(p, lambda, tie, rule, single_worker());
        const auto want = testing_support::ref_best_winner_score(p, lambda, ref_rule, ref_tie);
        EXPECT_EQ(cert.best_winner_score, want);
        EXPECT_EQ(cert.best_ratio, Ratio::of(cert.opt, want));
      }
    }
  }
}

TEST(OracleTest, IndependentOfWorkerCount) {
  Rng rng(15);
  for (int t = 0; t < 10; ++t) {
    const auto p = testing_support::random_profile(rng, rng.uniform(2, 8), 4, 1);
    OracleOptions many;
    many.workers = 4;
    const auto a =
        brute_force_best(p, 2, TieBreak::IntrinsicBest, DelegationRule::FirstListed, single_worker());
    const auto b = brute_force_best(p, 2, TieBreak::IntrinsicBest, DelegationRule::FirstListed, many);
    EXPECT_EQ(a.best_ratio, b.best_ratio);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.search_space, b.search_space);
  }
}

TEST(OracleTest, ExactSizeExcludesSmallerSets) {
  const auto p = gen_16_lower();
  OracleOptions exact;
  exact.exact_size = true;
  const auto cert =
      brute_force_best(p, 1, TieBreak::IntrinsicBest, DelegationRule::NearestHamming, exact);
  EXPECT_EQ(cert.search_space, 16u);
  EXPECT_EQ(cert.witness.size(), 1u);
}

TEST(OracleTest, BudgetExceeded) {
  const auto p = gen_omega_n(9);
  OracleOptions small;
  small.budget = 256;
  EXPECT_THROW(
      brute_force_best(p, 1, TieBreak::IntrinsicBest, DelegationRule::NearestHamming, small),
      BudgetExceeded);
  EXPECT_THROW(brute_force_best(p, 3, TieBreak::IntrinsicBest, DelegationRule::NearestHamming),
               BudgetExceeded);
}

TEST(OracleTest, CertificateJson) {
  const auto cert = brute_force_best(gen_16_lower(), 1, TieBreak::IntrinsicBest,
                                     DelegationRule::NearestHamming);
  const auto json = certificate_to_json(cert);
  EXPECT_NE(json.find("\"best_ratio\": \"8/5\""), std::string::npos);
}
