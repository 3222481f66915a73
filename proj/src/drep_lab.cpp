#include "proxyvote/drep_lab.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "proxyvote/errors.hpp"

namespace proxyvote {

DRepType drep0(const Profile& profile) {
  DRepType t{BitVector(profile.m)};
  t.advertised.set(optimal_proposal(profile));
  return t;
}

DRepType all_ones(std::size_t m) { return {BitVector(m, true)}; }

DRepType all_zeros(std::size_t m) { return {BitVector(m, false)}; }

std::array<DRepType, 2> majority_pair(const Profile& profile) {
  for (const auto& v : profile.voters) {
    if (v.k != 0) {
      throw NonMajorityThreshold("majority pair needs k_i = 0 for every voter; voter " +
                                 std::to_string(v.id) + " has k=" + std::to_string(v.k));
    }
  }
  return {all_zeros(profile.m), all_ones(profile.m)};
}

std::vector<DRepType> coherent_family(const Profile& profile,
                                      std::span<const std::size_t> core_subset) {
  VoterSet everyone(profile.voters.size());
  std::iota(everyone.begin(), everyone.end(), std::size_t{0});
  auto family = coherent_family(profile, everyone, core_subset);
  // Direct voting already elects win(P) when everybody reveals it.
  if (common_core(profile, everyone).test(optimal_proposal(profile))) family.clear();
  return family;
}

std::vector<DRepType> coherent_family(const Profile& profile, const VoterSet& members,
                                      std::span<const std::size_t> core_subset) {
  const std::size_t k = core_subset.size();
  if (k > 20) throw ModelError("core subset too large for an explicit family");
  std::vector<std::size_t> sorted(core_subset.begin(), core_subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ModelError("core subset has repeated proposals");
  }
  for (auto j : core_subset) {
    if (j >= profile.m) throw ModelError("core proposal out of range");
    for (auto i : members) {
      if (!profile.voters[i].revealed.test(j)) {
        throw CoreNotCommon("proposal " + std::to_string(j) + " is not revealed to voter " +
                            std::to_string(profile.voters[i].id));
      }
    }
  }
  const auto win = optimal_proposal(profile);
  std::vector<DRepType> family;
  family.reserve(std::size_t{2} << k);
  for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << k); ++sigma) {
    DRepType hidden_ones{BitVector(profile.m)};
    DRepType all_else{BitVector(profile.m, true)};
    hidden_ones.advertised.set(win);
    for (std::size_t b = 0; b < k; ++b) {
      const bool bit = (sigma >> (k - 1 - b)) & 1U;
      hidden_ones.advertised.set(core_subset[b], bit);
      all_else.advertised.set(core_subset[b], bit);
    }
    family.push_back(std::move(hidden_ones));
    family.push_back(std::move(all_else));
  }
  return family;
}

std::vector<DRepType> mirror_all(const Profile& profile) {
  const auto win = optimal_proposal(profile);
  std::vector<DRepType> out;
  out.reserve(profile.voters.size());
  for (const auto& v : profile.voters) {
    DRepType t{v.intrinsic};
    t.advertised.set(win);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::size_t> pick_core_subset(const Profile& profile, const VoterSet& members,
                                          std::size_t k) {
  const auto core = common_core(profile, members).indices();
  if (core.size() < k) {
    throw CoreNotCommon("common core has " + std::to_string(core.size()) +
                        " proposals, need " + std::to_string(k));
  }
  const auto win = optimal_proposal(profile);
  std::vector<std::size_t> picked;
  for (auto j : core) {
    if (picked.size() == k) break;
    if (j != win) picked.push_back(j);
  }
  if (picked.size() < k) picked.push_back(win);
  return picked;
}

MultiGroupResult multi_group_family(const Profile& profile, std::size_t k, std::size_t zeta,
                                    DelegationRule rule, const SearchLimits& limits) {
  auto partition = partition_k_coherent(profile, k, limits);
  if (zeta < 1 || zeta > partition.gamma_upper) {
    throw ModelError("zeta must lie in [1, " + std::to_string(partition.gamma_upper) + "]");
  }
  MultiGroupResult out;
  const std::size_t n = profile.voters.size();
  const bool mirror = k >= 40 || static_cast<unsigned __int128>(zeta) << (k + 1) >= n;
  if (mirror) {
    out.dreps = mirror_all(profile);
    out.used_mirror = true;
    return out;
  }
  auto cells = std::move(partition.cells);
  std::stable_sort(cells.begin(), cells.end(),
                   [](const VoterSet& a, const VoterSet& b) { return a.size() > b.size(); });
  cells.resize(zeta);

  std::vector<DRepType> full;
  std::vector<DRepType> filtered;
  for (const auto& cell : cells) {
    const auto subset = pick_core_subset(profile, cell, k);
    auto family = coherent_family(profile, cell, subset);
    for (std::size_t f = 0; f < family.size(); ++f) {
      if (f % 2 == 0) filtered.push_back(family[f]);
      full.push_back(std::move(family[f]));
    }
  }
  const auto with_full = run_election(profile, full, rule, TieBreak::IntrinsicBest);
  const auto with_filtered = run_election(profile, filtered, rule, TieBreak::IntrinsicBest);
  out.cells = std::move(cells);
  if (with_filtered.ratio < with_full.ratio) {
    out.dreps = std::move(filtered);
    out.filtered = true;
  } else {
    out.dreps = std::move(full);
  }
  return out;
}

namespace {

bool prefix_attracted(std::size_t mismatches, std::size_t revealed_prefix, std::size_t k,
                      std::size_t revealed_total, bool scale_k) {
  const std::size_t kk = scale_k && revealed_total > 0 ? k * revealed_prefix / revealed_total : k;
  if (kk > revealed_prefix) return false;
  return mismatches <= (revealed_prefix - kk) / 2;
}

}  // namespace

std::vector<DRepType> greedy(const Profile& profile, std::size_t lambda,
                             const GreedyOptions& options) {
  std::vector<std::size_t> order = options.proposal_order;
  if (order.empty()) {
    order.resize(profile.m);
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else {
    auto check = order;
    std::sort(check.begin(), check.end());
    for (std::size_t j = 0; j < check.size(); ++j) {
      if (check[j] != j || check.size() != profile.m) {
        throw ModelError("greedy proposal order is not a permutation of the proposals");
      }
    }
  }

  std::vector<std::size_t> remaining(profile.voters.size());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  std::vector<std::size_t> totals(profile.voters.size());
  for (std::size_t i = 0; i < totals.size(); ++i) totals[i] = profile.voters[i].revealed_count();

  std::vector<DRepType> out;
  std::vector<std::size_t> mismatches;
  std::vector<std::size_t> seen;
  while (out.size() < lambda && !remaining.empty()) {
    DRepType t{BitVector(profile.m)};
    mismatches.assign(remaining.size(), 0);
    seen.assign(remaining.size(), 0);
    for (auto j : order) {
      std::size_t count_zero = 0;
      std::size_t count_one = 0;
      for (std::size_t r = 0; r < remaining.size(); ++r) {
        const auto& v = profile.voters[remaining[r]];
        const bool revealed = v.revealed.test(j);
        const std::size_t prefix = seen[r] + (revealed ? 1 : 0);
        const bool value = v.intrinsic.test(j);
        const std::size_t mis_if_zero = mismatches[r] + (revealed && value ? 1 : 0);
        const std::size_t mis_if_one = mismatches[r] + (revealed && !value ? 1 : 0);
        if (prefix_attracted(mis_if_zero, prefix, v.k, totals[remaining[r]], options.scale_k)) {
          ++count_zero;
        }
        if (prefix_attracted(mis_if_one, prefix, v.k, totals[remaining[r]], options.scale_k)) {
          ++count_one;
        }
      }
      const bool bit = count_one >= count_zero;
      t.advertised.set(j, bit);
      for (std::size_t r = 0; r < remaining.size(); ++r) {
        const auto& v = profile.voters[remaining[r]];
        if (!v.revealed.test(j)) continue;
        ++seen[r];
        if (v.intrinsic.test(j) != bit) ++mismatches[r];
      }
    }
    std::vector<std::size_t> next;
    for (auto i : remaining) {
      if (!attracts(profile.voters[i], t)) next.push_back(i);
    }
    remaining = std::move(next);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace proxyvote
