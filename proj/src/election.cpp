#include "proxyvote/election.hpp"

#include <algorithm>

#include "proxyvote/errors.hpp"

namespace proxyvote {

std::size_t distance(const Voter& voter, const DRepType& drep) {
  if (drep.size() != voter.intrinsic.size()) {
    throw ModelError("dRep length " + std::to_string(drep.size()) + " differs from ballot length " +
                     std::to_string(voter.intrinsic.size()));
  }
  return BitVector::masked_mismatch(voter.intrinsic, drep.advertised, voter.revealed);
}

bool attracts(const Voter& voter, const DRepType& drep) {
  return distance(voter, drep) <= voter.threshold();
}

std::vector<std::size_t> attraction_set(const Profile& profile, const DRepType& drep) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < profile.voters.size(); ++i) {
    if (attracts(profile.voters[i], drep)) out.push_back(i);
  }
  return out;
}

Assignment assign_delegations(const Profile& profile, std::span<const DRepType> dreps,
                              DelegationRule rule) {
  Assignment out(profile.voters.size());
  for (std::size_t i = 0; i < profile.voters.size(); ++i) {
    const auto& voter = profile.voters[i];
    const auto limit = voter.threshold();
    std::size_t best_distance = 0;
    for (std::size_t d = 0; d < dreps.size(); ++d) {
      const auto dist = distance(voter, dreps[d]);
      if (dist > limit) continue;
      if (rule == DelegationRule::FirstListed) {
        out[i] = d;
        break;
      }
      if (!out[i] || dist < best_distance) {
        out[i] = d;
        best_distance = dist;
      }
    }
  }
  return out;
}

ScoreVector scores(const Profile& profile, std::span<const DRepType> dreps,
                   const Assignment& assignment) {
  if (assignment.size() != profile.voters.size()) {
    throw ModelError("assignment size differs from voter count");
  }
  ScoreVector out(profile.m, 0);
  std::vector<std::int64_t> drep_weight(dreps.size(), 0);
  for (std::size_t i = 0; i < profile.voters.size(); ++i) {
    const auto& voter = profile.voters[i];
    if (assignment[i]) {
      if (*assignment[i] >= dreps.size()) throw ModelError("assignment refers to a missing dRep");
      drep_weight[*assignment[i]] += voter.weight;
      continue;
    }
    for (auto j : (voter.intrinsic & voter.revealed).indices()) out[j] += voter.weight;
  }
  for (std::size_t d = 0; d < dreps.size(); ++d) {
    if (drep_weight[d] == 0) continue;
    for (auto j : dreps[d].advertised.indices()) out[j] += drep_weight[d];
  }
  return out;
}

ScoreVector revealed_scores(const Profile& profile) {
  return scores(profile, {}, Assignment(profile.voters.size()));
}

ScoreVector intrinsic_scores(const Profile& profile) {
  ScoreVector out(profile.m, 0);
  for (const auto& voter : profile.voters) {
    for (auto j : voter.intrinsic.indices()) out[j] += voter.weight;
  }
  return out;
}

std::size_t winner(std::span<const Score> counted, TieBreak tiebreak,
                   std::span<const Score> tie_key) {
  if (counted.empty()) throw ModelError("winner of an empty score vector");
  if (tiebreak != TieBreak::LowestIndex && tie_key.size() != counted.size()) {
    throw ModelError("tie-break key length differs from score vector");
  }
  std::size_t best = 0;
  for (std::size_t j = 1; j < counted.size(); ++j) {
    if (counted[j] > counted[best]) {
      best = j;
      continue;
    }
    if (counted[j] < counted[best]) continue;
    switch (tiebreak) {
      case TieBreak::IntrinsicBest:
      case TieBreak::RevealedBest:
        if (tie_key[j] > tie_key[best]) best = j;
        break;
      case TieBreak::AdversarialIntrinsic:
        if (tie_key[j] < tie_key[best]) best = j;
        break;
      case TieBreak::LowestIndex:
        break;
    }
  }
  return best;
}

std::size_t optimal_proposal(const Profile& profile) {
  const auto sc = intrinsic_scores(profile);
  return winner(sc, TieBreak::LowestIndex, {});
}

std::int64_t ElectionResult::delegated_weight(const Profile& profile) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i]) total += profile.voters[i].weight;
  }
  return total;
}

std::size_t ElectionResult::direct_count() const {
  return static_cast<std::size_t>(
      std::count_if(assignment.begin(), assignment.end(), [](const auto& a) { return !a; }));
}

ElectionResult run_election(const Profile& profile, std::span<const DRepType> dreps,
                            DelegationRule rule, TieBreak tiebreak) {
  ElectionResult result;
  result.assignment = assign_delegations(profile, dreps, rule);
  result.counted_scores = scores(profile, dreps, result.assignment);
  const auto intrinsic = intrinsic_scores(profile);
  if (tiebreak == TieBreak::RevealedBest) {
    const auto direct = revealed_scores(profile);
    result.winner = winner(result.counted_scores, tiebreak, direct);
  } else {
    result.winner = winner(result.counted_scores, tiebreak, intrinsic);
  }
  result.winner_intrinsic_score = intrinsic[result.winner];
  result.opt = *std::max_element(intrinsic.begin(), intrinsic.end());
  result.ratio = Ratio::of(result.opt, result.winner_intrinsic_score);
  return result;
}

Profile expand_weights(const Profile& profile) {
  Profile out;
  out.m = profile.m;
  std::int64_t next_id = 1;
  for (const auto& voter : profile.voters) {
    for (std::int64_t c = 0; c < voter.weight; ++c) {
      Voter clone = voter;
      clone.id = next_id++;
      clone.weight = 1;
      out.voters.push_back(std::move(clone));
    }
  }
  return out;
}

std::string to_string(TieBreak tiebreak) {
  switch (tiebreak) {
    case TieBreak::IntrinsicBest: return "intrinsic-best";
    case TieBreak::RevealedBest: return "revealed-best";
    case TieBreak::AdversarialIntrinsic: return "adversarial";
    case TieBreak::LowestIndex: return "lowest-index";
  }
  return "?";
}

std::string to_string(DelegationRule rule) {
  return rule == DelegationRule::FirstListed ? "first-listed" : "nearest";
}

TieBreak parse_tiebreak(const std::string& text) {
  for (auto t : {TieBreak::IntrinsicBest, TieBreak::RevealedBest, TieBreak::AdversarialIntrinsic,
                 TieBreak::LowestIndex}) {
    if (to_string(t) == text) return t;
  }
  throw ModelError("unknown tie-break policy '" + text + "'");
}

DelegationRule parse_delegation_rule(const std::string& text) {
  if (text == "first-listed") return DelegationRule::FirstListed;
  if (text == "nearest") return DelegationRule::NearestHamming;
  throw ModelError("unknown delegation rule '" + text + "'");
}

}  // namespace proxyvote
