#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "proxyvote/profile.hpp"

namespace proxyvote {

/// Sorted positions into Profile::voters.
using VoterSet = std::vector<std::size_t>;

struct SearchLimits {
  // Candidate cores examined by the exact (x, delta) search.
  std::uint64_t core_budget = std::uint64_t{1} << 20;
  // Largest electorate for which the minimum partition is computed exactly.
  std::size_t exact_partition_max_voters = 12;
};

/// Maximum set of voters sharing one revealed set; ties go to the group
/// holding the smallest voter id.
VoterSet largest_coherent_set(const Profile& profile);
bool is_coherent(const Profile& profile);
bool is_coherent_set(const Profile& profile, const VoterSet& members);

struct AlphaBeta {
  std::size_t alpha = 0;  // |union of R_i|
  std::size_t beta = 0;   // min |R_i|
};
AlphaBeta alpha_beta(const Profile& profile);
AlphaBeta alpha_beta(const Profile& profile, const VoterSet& members);

/// Common revealed set of `members` (all proposals when empty).
BitVector common_core(const Profile& profile, const VoterSet& members);

/// X subset of every R_i, |X| >= x, |R_i \ X| <= delta for each member.
bool satisfies_xdelta(const Profile& profile, const VoterSet& members, const BitVector& core,
                      std::size_t x, std::size_t delta);

struct CoherentCore {
  VoterSet members;
  BitVector core;
  bool exact = true;  // false when the budget forced the greedy core growth
};

/// Maximal (x, delta)-coherent set among `candidates` (all voters when omitted).
CoherentCore find_xdelta_coherent(const Profile& profile, std::size_t x, std::size_t delta,
                                  const SearchLimits& limits = {});
CoherentCore find_xdelta_coherent(const Profile& profile, const VoterSet& candidates,
                                  std::size_t x, std::size_t delta,
                                  const SearchLimits& limits = {});

struct KPartition {
  std::vector<VoterSet> cells;  // greedy, largest extracted first
  std::size_t gamma_upper = 0;
  std::optional<std::size_t> gamma_exact;
};

/// Disjoint cover of N by (k, m-k)-coherent cells.
KPartition partition_k_coherent(const Profile& profile, std::size_t k,
                                const SearchLimits& limits = {});

/// Exact minimum number of (k, m-k)-coherent cells; nullopt above `max_voters`.
std::optional<std::size_t> min_k_coherent_partition(const Profile& profile, std::size_t k,
                                                    std::size_t max_voters);

struct CoherenceReport {
  VoterSet largest_coherent;
  bool is_coherent = false;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::optional<CoherentCore> xdelta;
  std::optional<std::size_t> x;
  std::optional<std::size_t> delta;
  std::optional<KPartition> partition;
  std::optional<std::size_t> partition_k;
};

struct AnalyzeQuery {
  std::optional<std::size_t> k;
  std::optional<std::size_t> x;
  std::optional<std::size_t> delta;
};

CoherenceReport analyze(const Profile& profile, const AnalyzeQuery& query = {},
                        const SearchLimits& limits = {});

/// JSON with voter ids (not positions) and proposal indices.
std::string report_to_json(const Profile& profile, const CoherenceReport& report);

}  // namespace proxyvote
