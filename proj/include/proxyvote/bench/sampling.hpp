#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "proxyvote/bench/completion.hpp"
#include "proxyvote/bench/dataset.hpp"
#include "proxyvote/profile.hpp"

namespace proxyvote::bench {

struct SampleConfig {
  std::size_t user_sample = 200;
  std::size_t item_sample = 40;
  double min_review_frac = 0.05;  // users reviewing fewer sampled items are dropped
  double max_review_frac = 0.10;  // items reviewed by more remaining users are dropped
};

/// Users and items that survived sampling and filtering. Proposal j < items.size()
/// is items[j]; proposal items.size() is the unanimity item, which nobody reviewed
/// and everybody approves.
struct SampledElection {
  std::vector<UserId> users;
  std::vector<ItemId> items;
  std::vector<std::vector<Review>> reviews;  // per user, Review::item indexes `items`

  std::size_t m() const { return items.size() + 1; }
  std::size_t unanimity_index() const { return items.size(); }
};

/// Seeded uniform sample of users and of items with features, then the user
/// filter, then the item filter (applied once each). Users whose reviews were
/// all filtered away are dropped. Throws EmptyAfterFilter when no users or no
/// items remain.
SampledElection sample_and_filter(const Dataset& data, const SampleConfig& config,
                                  std::uint64_t seed);

// What each voter reveals before hiding.
enum class RevealBase {
  Reviewed,   // the items the user rated
  Completed,  // every real item; the unanimity item stays hidden
};

/// Completes, approvalizes and appends the unanimity item. Weights are 1,
/// k_i = 0, voter ids are the MovieLens user ids.
Profile build_profile(const Dataset& data, const SampledElection& sample, ExponentSign sign,
                      RevealBase base = RevealBase::Reviewed);

/// Keeps a uniformly random subset of ceil(ratio * m) of each voter's revealed
/// coordinates (never more than they had, never fewer than one). k_i is
/// clamped to the new m_i.
Profile hide_coordinates(const Profile& profile, double reveal_ratio, std::uint64_t seed);

}  // namespace proxyvote::bench
