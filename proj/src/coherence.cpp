#include "proxyvote/coherence.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include <json.hpp>

#include "proxyvote/errors.hpp"

namespace proxyvote {

namespace {

VoterSet all_voters(const Profile& profile) {
  VoterSet out(profile.voters.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

// Saturating sum of C(n, s) for s in [lo, n].
std::uint64_t count_subsets_at_least(std::size_t n, std::size_t lo, std::uint64_t cap) {
  std::uint64_t total = 0;
  for (std::size_t s = lo; s <= n; ++s) {
    // C(n, s) computed incrementally with saturation.
    std::uint64_t c = 1;
    for (std::size_t i = 1; i <= s; ++i) {
      const auto num = static_cast<unsigned __int128>(c) * (n - s + i);
      c = static_cast<std::uint64_t>(num / i);
      if (c > cap) return cap + 1;
    }
    total += c;
    if (total > cap) return cap + 1;
  }
  return total;
}

VoterSet members_for_core(const Profile& profile, const VoterSet& candidates,
                          const BitVector& core, std::size_t delta) {
  VoterSet out;
  const auto core_size = core.count();
  for (auto i : candidates) {
    const auto& r = profile.voters[i].revealed;
    if (!core.is_subset_of(r)) continue;
    if (r.count() - core_size <= delta) out.push_back(i);
  }
  return out;
}

bool better_members(const VoterSet& a, const VoterSet& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

CoherentCore finalize(const Profile& profile, VoterSet members, BitVector fallback_core,
                      bool exact) {
  CoherentCore out;
  out.exact = exact;
  out.core = members.empty() ? std::move(fallback_core) : common_core(profile, members);
  out.members = std::move(members);
  return out;
}

CoherentCore exact_search(const Profile& profile, const VoterSet& candidates, std::size_t x,
                          std::size_t delta, const std::vector<std::size_t>& universe) {
  const std::size_t u = universe.size();
  VoterSet best;
  BitVector best_core(profile.m);
  bool found = false;
  for (std::size_t s = u + 1; s-- > x;) {
    // Gosper's hack over s-subsets of the universe.
    std::uint64_t mask = s == 0 ? 0 : ((s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1));
    const std::uint64_t limit = u == 64 ? 0 : (std::uint64_t{1} << u);
    while (true) {
      BitVector core(profile.m);
      for (std::size_t b = 0; b < u; ++b) {
        if ((mask >> b) & 1U) core.set(universe[b]);
      }
      auto members = members_for_core(profile, candidates, core, delta);
      if (!found || better_members(members, best)) {
        best = std::move(members);
        best_core = std::move(core);
        found = true;
      }
      if (s == 0) break;
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      if (r == 0 || r >= limit) break;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return finalize(profile, std::move(best), std::move(best_core), true);
}

CoherentCore greedy_search(const Profile& profile, const VoterSet& candidates, std::size_t x,
                           std::size_t delta) {
  BitVector core(profile.m);
  VoterSet pool = candidates;
  VoterSet best;
  BitVector best_core(profile.m);
  bool found = false;
  while (true) {
    if (core.count() >= x) {
      auto members = members_for_core(profile, candidates, core, delta);
      if (!found || better_members(members, best)) {
        best = std::move(members);
        best_core = core;
        found = true;
      }
    }
    // Grow the core by the proposal most often revealed within the pool.
    std::size_t pick = profile.m;
    std::size_t pick_count = 0;
    for (std::size_t j = 0; j < profile.m; ++j) {
      if (core.test(j)) continue;
      std::size_t c = 0;
      for (auto i : pool) c += profile.voters[i].revealed.test(j) ? 1 : 0;
      if (c > pick_count) {
        pick = j;
        pick_count = c;
      }
    }
    if (pick == profile.m) break;
    core.set(pick);
    VoterSet next;
    for (auto i : pool) {
      if (profile.voters[i].revealed.test(pick)) next.push_back(i);
    }
    pool = std::move(next);
  }
  if (!found) {
    // Not even an x-sized core is revealed to anyone: only the empty set qualifies.
    BitVector filler(profile.m);
    for (std::size_t j = 0; j < std::min(x, profile.m); ++j) filler.set(j);
    return finalize(profile, {}, std::move(filler), false);
  }
  return finalize(profile, std::move(best), std::move(best_core), false);
}

}  // namespace

VoterSet largest_coherent_set(const Profile& profile) {
  VoterSet best;
  std::int64_t best_id = 0;
  for (std::size_t i = 0; i < profile.voters.size(); ++i) {
    VoterSet group;
    std::int64_t min_id = profile.voters[i].id;
    for (std::size_t j = 0; j < profile.voters.size(); ++j) {
      if (profile.voters[j].revealed == profile.voters[i].revealed) {
        group.push_back(j);
        min_id = std::min(min_id, profile.voters[j].id);
      }
    }
    if (group.size() > best.size() || (group.size() == best.size() && min_id < best_id)) {
      best = std::move(group);
      best_id = min_id;
    }
  }
  return best;
}

bool is_coherent(const Profile& profile) {
  return largest_coherent_set(profile).size() == profile.voters.size();
}

bool is_coherent_set(const Profile& profile, const VoterSet& members) {
  for (auto i : members) {
    if (profile.voters[i].revealed != profile.voters[members.front()].revealed) return false;
  }
  return true;
}

AlphaBeta alpha_beta(const Profile& profile) { return alpha_beta(profile, all_voters(profile)); }

AlphaBeta alpha_beta(const Profile& profile, const VoterSet& members) {
  AlphaBeta out;
  if (members.empty()) return out;
  BitVector uni(profile.m);
  out.beta = std::numeric_limits<std::size_t>::max();
  for (auto i : members) {
    const auto& r = profile.voters[i].revealed;
    uni |= r;
    out.beta = std::min(out.beta, r.count());
  }
  out.alpha = uni.count();
  return out;
}

BitVector common_core(const Profile& profile, const VoterSet& members) {
  BitVector core(profile.m, true);
  for (auto i : members) core &= profile.voters[i].revealed;
  return core;
}

bool satisfies_xdelta(const Profile& profile, const VoterSet& members, const BitVector& core,
                      std::size_t x, std::size_t delta) {
  if (core.size() != profile.m || core.count() < x) return false;
  for (auto i : members) {
    const auto& r = profile.voters[i].revealed;
    if (!core.is_subset_of(r)) return false;
    if (r.count() - core.count() > delta) return false;
  }
  return true;
}

CoherentCore find_xdelta_coherent(const Profile& profile, std::size_t x, std::size_t delta,
                                  const SearchLimits& limits) {
  return find_xdelta_coherent(profile, all_voters(profile), x, delta, limits);
}

CoherentCore find_xdelta_coherent(const Profile& profile, const VoterSet& candidates,
                                  std::size_t x, std::size_t delta, const SearchLimits& limits) {
  if (x > profile.m) throw ModelError("core size x exceeds m");
  BitVector uni(profile.m);
  for (auto i : candidates) uni |= profile.voters[i].revealed;
  const auto universe = uni.indices();
  CoherentCore result;
  const bool fits = universe.size() <= 63 &&
                    count_subsets_at_least(universe.size(), x, limits.core_budget) <=
                        limits.core_budget;
  if (x > universe.size()) {
    BitVector filler(profile.m);
    for (std::size_t j = 0; j < x; ++j) filler.set(j);
    result = finalize(profile, {}, std::move(filler), true);
  } else if (fits) {
    result = exact_search(profile, candidates, x, delta, universe);
  } else {
    result = greedy_search(profile, candidates, x, delta);
  }
  if (!satisfies_xdelta(profile, result.members, result.core, x, delta)) {
    throw ModelError("internal: (x, delta) witness failed verification");
  }
  return result;
}

KPartition partition_k_coherent(const Profile& profile, std::size_t k,
                                const SearchLimits& limits) {
  const auto ab = alpha_beta(profile);
  if (k > ab.beta) {
    throw ModelError("k=" + std::to_string(k) + " exceeds the smallest revealed set (" +
                     std::to_string(ab.beta) + ")");
  }
  KPartition out;
  VoterSet remaining = all_voters(profile);
  const std::size_t delta = profile.m - k;
  while (!remaining.empty()) {
    auto cell = find_xdelta_coherent(profile, remaining, k, delta, limits);
    if (cell.members.empty()) throw ModelError("internal: empty partition cell");
    VoterSet rest;
    std::set_difference(remaining.begin(), remaining.end(), cell.members.begin(),
                        cell.members.end(), std::back_inserter(rest));
    out.cells.push_back(std::move(cell.members));
    remaining = std::move(rest);
  }
  out.gamma_upper = out.cells.size();
  out.gamma_exact = min_k_coherent_partition(profile, k, limits.exact_partition_max_voters);
  return out;
}

std::optional<std::size_t> min_k_coherent_partition(const Profile& profile, std::size_t k,
                                                    std::size_t max_voters) {
  const std::size_t n = profile.voters.size();
  if (n > max_voters || n >= 31) return std::nullopt;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // A cell is (k, m-k)-coherent iff its members share at least k revealed proposals.
  std::vector<BitVector> inter(full + 1);
  std::vector<char> valid(full + 1, 0);
  inter[0] = BitVector(profile.m, true);
  valid[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    inter[mask] = inter[mask & (mask - 1)] & profile.voters[low].revealed;
    valid[mask] = inter[mask].count() >= k ? 1 : 0;
  }
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(full + 1, kInf);
  best[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    // Enumerate sub-masks of `rest`; each cell contains the lowest voter.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t cell = sub | low;
      if (valid[cell] && best[mask ^ cell] != kInf) {
        best[mask] = std::min(best[mask], best[mask ^ cell] + 1);
      }
      if (sub == 0) break;
    }
  }
  if (best[full] == kInf) return std::nullopt;
  return best[full];
}

CoherenceReport analyze(const Profile& profile, const AnalyzeQuery& query,
                        const SearchLimits& limits) {
  CoherenceReport report;
  report.largest_coherent = largest_coherent_set(profile);
  report.is_coherent = report.largest_coherent.size() == profile.voters.size();
  const auto ab = alpha_beta(profile);
  report.alpha = ab.alpha;
  report.beta = ab.beta;
  if (query.x || query.delta) {
    report.x = query.x.value_or(0);
    report.delta = query.delta.value_or(0);
    report.xdelta = find_xdelta_coherent(profile, *report.x, *report.delta, limits);
  }
  if (query.k) {
    report.partition_k = *query.k;
    report.partition = partition_k_coherent(profile, *query.k, limits);
  }
  return report;
}

std::string report_to_json(const Profile& profile, const CoherenceReport& report) {
  using ordered_json = nlohmann::ordered_json;
  auto ids = [&](const VoterSet& set) {
    ordered_json arr = ordered_json::array();
    for (auto i : set) arr.push_back(profile.voters[i].id);
    return arr;
  };
  ordered_json doc;
  doc["largest_coherent"] = ids(report.largest_coherent);
  doc["largest_coherent_size"] = report.largest_coherent.size();
  doc["is_coherent"] = report.is_coherent;
  doc["alpha"] = report.alpha;
  doc["beta"] = report.beta;
  if (report.xdelta) {
    ordered_json xd;
    xd["x"] = *report.x;
    xd["delta"] = *report.delta;
    xd["members"] = ids(report.xdelta->members);
    xd["core"] = report.xdelta->core.indices();
    xd["exact"] = report.xdelta->exact;
    doc["xdelta_coherent"] = std::move(xd);
  }
  if (report.partition) {
    ordered_json part;
    part["k"] = *report.partition_k;
    part["cells"] = ordered_json::array();
    for (const auto& cell : report.partition->cells) part["cells"].push_back(ids(cell));
    part["gamma_upper"] = report.partition->gamma_upper;
    if (report.partition->gamma_exact) {
      part["gamma_exact"] = *report.partition->gamma_exact;
    } else {
      part["gamma_exact"] = nullptr;
    }
    doc["partition"] = std::move(part);
  }
  return doc.dump(2) + "\n";
}

}  // namespace proxyvote
