#include "proxyvote/bench/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <unordered_map>

#include "proxyvote/errors.hpp"

namespace proxyvote::bench {
namespace {

constexpr double kEps = 1e-9;

template <typename T>
std::vector<T> draw(const std::vector<T>& population, std::size_t count, std::mt19937_64& rng) {
  std::vector<T> out;
  std::sample(population.begin(), population.end(), std::back_inserter(out),
              std::min(count, population.size()), rng);
  return out;
}

}  // namespace

SampledElection sample_and_filter(const Dataset& data, const SampleConfig& config,
                                  std::uint64_t seed) {
  if (config.min_review_frac < 0.0 || config.max_review_frac < 0.0) {
    throw ModelError("review fractions must be non-negative");
  }
  std::mt19937_64 rng(seed);
  const auto users = draw(data.ratings.users(), config.user_sample, rng);
  std::vector<ItemId> all_items;
  for (const auto& [id, row] : data.features.items) all_items.push_back(id);
  auto items = draw(all_items, config.item_sample, rng);
  if (users.empty() || items.empty()) throw EmptyAfterFilter("nothing to sample");

  std::unordered_map<UserId, std::size_t> user_pos;
  for (std::size_t u = 0; u < users.size(); ++u) user_pos[users[u]] = u;
  std::unordered_map<ItemId, std::size_t> item_pos;
  for (std::size_t j = 0; j < items.size(); ++j) item_pos[items[j]] = j;

  std::vector<std::vector<Review>> reviews(users.size());
  for (const auto& e : data.ratings.entries) {
    auto u = user_pos.find(e.user);
    if (u == user_pos.end()) continue;
    auto j = item_pos.find(e.item);
    if (j == item_pos.end()) continue;
    reviews[u->second].push_back({j->second, e.rating});
  }

  // Users first.
  const double min_reviews = config.min_review_frac * static_cast<double>(items.size());
  std::vector<std::size_t> kept_users;
  for (std::size_t u = 0; u < users.size(); ++u) {
    if (static_cast<double>(reviews[u].size()) + kEps >= min_reviews) kept_users.push_back(u);
  }

  // Then items, counted over the remaining users.
  std::vector<std::size_t> reviewers(items.size(), 0);
  for (auto u : kept_users) {
    for (const auto& r : reviews[u]) ++reviewers[r.item];
  }
  const double max_reviewers = config.max_review_frac * static_cast<double>(kept_users.size());
  std::vector<std::size_t> remap(items.size(), items.size());
  SampledElection out;
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (static_cast<double>(reviewers[j]) <= max_reviewers + kEps) {
      remap[j] = out.items.size();
      out.items.push_back(items[j]);
    }
  }

  for (auto u : kept_users) {
    std::vector<Review> kept;
    for (const auto& r : reviews[u]) {
      if (remap[r.item] != items.size()) kept.push_back({remap[r.item], r.rating});
    }
    if (kept.empty()) continue;
    std::sort(kept.begin(), kept.end(),
              [](const Review& a, const Review& b) { return a.item < b.item; });
    out.users.push_back(users[u]);
    out.reviews.push_back(std::move(kept));
  }
  if (out.users.empty()) throw EmptyAfterFilter("no users left after filtering");
  if (out.items.empty()) throw EmptyAfterFilter("no movies left after filtering");
  return out;
}

Profile build_profile(const Dataset& data, const SampledElection& sample, ExponentSign sign,
                      RevealBase base) {
  std::vector<const ItemFeatureRow*> rows;
  rows.reserve(sample.items.size());
  for (auto id : sample.items) rows.push_back(&data.features.at(id));
  const SimilarityMatrix sim(rows, sign);

  Profile profile;
  profile.m = sample.m();
  for (std::size_t u = 0; u < sample.users.size(); ++u) {
    const auto& reviews = sample.reviews[u];
    const auto completed = complete_intrinsic(reviews, sim);
    const BitVector approvals = approvalize(completed, reviews);
    Voter v;
    v.id = sample.users[u];
    v.intrinsic = BitVector(profile.m);
    v.revealed = BitVector(profile.m);
    for (std::size_t j = 0; j < sample.items.size(); ++j) v.intrinsic.set(j, approvals.test(j));
    v.intrinsic.set(sample.unanimity_index());
    if (base == RevealBase::Reviewed) {
      for (const auto& r : reviews) v.revealed.set(r.item);
    } else {
      for (std::size_t j = 0; j < sample.items.size(); ++j) v.revealed.set(j);
    }
    profile.voters.push_back(std::move(v));
  }
  profile.validate();
  return profile;
}

Profile hide_coordinates(const Profile& profile, double reveal_ratio, std::uint64_t seed) {
  if (!(reveal_ratio > 0.0 && reveal_ratio <= 1.0)) {
    throw ModelError("reveal ratio must lie in (0, 1]");
  }
  const auto target = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(reveal_ratio * static_cast<double>(profile.m) - kEps)));
  std::mt19937_64 rng(seed);
  Profile out = profile;
  for (auto& v : out.voters) {
    const auto current = v.revealed.indices();
    if (current.size() <= target) continue;
    std::vector<std::size_t> keep;
    std::sample(current.begin(), current.end(), std::back_inserter(keep), target, rng);
    BitVector mask(profile.m);
    for (auto j : keep) mask.set(j);
    v.revealed = mask;
    v.k = std::min(v.k, v.revealed_count());
  }
  return out;
}

}  // namespace proxyvote::bench
