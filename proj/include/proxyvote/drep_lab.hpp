#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "proxyvote/coherence.hpp"
#include "proxyvote/election.hpp"
#include "proxyvote/profile.hpp"

namespace proxyvote {

// All constructions read the intrinsic profile: dReps are fully informed.

/// Approves win(P) only.
DRepType drep0(const Profile& profile);
DRepType all_ones(std::size_t m);
DRepType all_zeros(std::size_t m);

/// {all_zeros, all_ones}. Every voter is attracted by one of them when all
/// k_i = 0. Throws NonMajorityThreshold otherwise.
std::array<DRepType, 2> majority_pair(const Profile& profile);

/// 2^(k+1) dReps for k = |core_subset|: for each assignment sigma of the
/// subset, t(sigma,0) approves sigma's ones plus win(P), t(sigma,1) approves
/// everything outside the subset. Emitted as t(sigma,0), t(sigma,1) pairs,
/// sigma in increasing binary order. The subset must be revealed to every
/// voter in `members` (all voters when omitted); throws CoreNotCommon otherwise.
/// The all-voters form returns no dReps when win(P) is revealed to everybody.
std::vector<DRepType> coherent_family(const Profile& profile,
                                      std::span<const std::size_t> core_subset);
std::vector<DRepType> coherent_family(const Profile& profile, const VoterSet& members,
                                      std::span<const std::size_t> core_subset);

/// One dRep per voter: the intrinsic ballot with win(P) forced to approve.
std::vector<DRepType> mirror_all(const Profile& profile);

struct MultiGroupResult {
  std::vector<DRepType> dreps;
  bool used_mirror = false;
  bool filtered = false;  // true when the t(sigma,1)-free family was chosen
  std::vector<VoterSet> cells;  // partition cells the family was built for
};

/// Families for the zeta largest (k, m-k)-coherent cells, returning whichever
/// of the full family and its t(sigma,1)-free half elects better. Falls back to
/// mirror_all when zeta * 2^(k+1) >= n.
MultiGroupResult multi_group_family(const Profile& profile, std::size_t k, std::size_t zeta,
                                    DelegationRule rule = DelegationRule::NearestHamming,
                                    const SearchLimits& limits = {});

struct GreedyOptions {
  // Scale k_i to floor(k_i * m_i' / m_i) on a truncated revealed set of size m_i'.
  bool scale_k = true;
  // Scan order of proposals; empty means 0..m-1.
  std::vector<std::size_t> proposal_order;
};

/// Builds up to `lambda` dReps one proposal at a time. Each bit takes the value
/// attracting more still-undelegated voters on the prefix scanned so far
/// (ties go to 1); voters attracted by a finished dRep are removed.
std::vector<DRepType> greedy(const Profile& profile, std::size_t lambda,
                             const GreedyOptions& options = {});

/// k-subset of the common core of `members`, avoiding win(P) where possible.
std::vector<std::size_t> pick_core_subset(const Profile& profile, const VoterSet& members,
                                          std::size_t k);

}  // namespace proxyvote
