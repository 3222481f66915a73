#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "proxyvote/profile.hpp"
#include "proxyvote/ratio.hpp"

namespace proxyvote {

using Score = std::int64_t;
using ScoreVector = std::vector<Score>;

/// Every policy settles residual ties by lowest proposal index.
enum class TieBreak {
  IntrinsicBest,         // maximal intrinsic score among tied proposals
  RevealedBest,          // maximal direct-vote (revealed) score
  AdversarialIntrinsic,  // minimal intrinsic score
  LowestIndex,
};

/// How a voter attracted by several dReps picks one.
enum class DelegationRule {
  FirstListed,     // first attracting dRep in list order
  NearestHamming,  // smallest distance, list position breaks ties
};

/// assignment[i] is the dRep index voter i delegated to, or nullopt (direct).
using Assignment = std::vector<std::optional<std::size_t>>;

std::size_t distance(const Voter& voter, const DRepType& drep);
bool attracts(const Voter& voter, const DRepType& drep);

/// Voter positions (into profile.voters) attracted by `drep`, ascending.
std::vector<std::size_t> attraction_set(const Profile& profile, const DRepType& drep);

Assignment assign_delegations(const Profile& profile, std::span<const DRepType> dreps,
                              DelegationRule rule);

/// Counted score of each proposal: dReps vote with the weight delegated to them,
/// direct voters contribute their revealed approvals.
ScoreVector scores(const Profile& profile, std::span<const DRepType> dreps,
                   const Assignment& assignment);

/// Direct-vote scores with no dReps present.
ScoreVector revealed_scores(const Profile& profile);
ScoreVector intrinsic_scores(const Profile& profile);

/// Proposal with maximal `counted` score. Among ties, `tie_key` decides:
/// maximised for IntrinsicBest/RevealedBest, minimised for
/// AdversarialIntrinsic, ignored for LowestIndex. Callers pass intrinsic
/// scores for the intrinsic policies and revealed scores for RevealedBest.
std::size_t winner(std::span<const Score> counted, TieBreak tiebreak,
                   std::span<const Score> tie_key);

/// win(P): the intrinsic winner, lowest index among maxima.
std::size_t optimal_proposal(const Profile& profile);

struct ElectionResult {
  Assignment assignment;
  ScoreVector counted_scores;
  std::size_t winner = 0;
  Score winner_intrinsic_score = 0;
  Score opt = 0;
  Ratio ratio = Ratio::infinite();

  std::int64_t delegated_weight(const Profile& profile) const;
  std::size_t direct_count() const;
};

ElectionResult run_election(const Profile& profile, std::span<const DRepType> dreps,
                            DelegationRule rule = DelegationRule::NearestHamming,
                            TieBreak tiebreak = TieBreak::IntrinsicBest);

/// Replaces each weight-w voter by w unit-weight clones (ids renumbered 1..W).
Profile expand_weights(const Profile& profile);

std::string to_string(TieBreak tiebreak);
std::string to_string(DelegationRule rule);
TieBreak parse_tiebreak(const std::string& text);
DelegationRule parse_delegation_rule(const std::string& text);

}  // namespace proxyvote
