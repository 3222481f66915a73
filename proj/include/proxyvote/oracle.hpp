#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "proxyvote/election.hpp"
#include "proxyvote/profile.hpp"
#include "proxyvote/ratio.hpp"

namespace proxyvote {

struct OracleOptions {
  // Enumeration is refused when 2^(lambda * m) exceeds this.
  std::uint64_t budget = std::uint64_t{1} << 20;
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  // Only tuples of exactly lambda dReps; by default every size 0..lambda counts.
  bool exact_size = false;
};

struct OracleCertificate {
  Ratio best_ratio = Ratio::infinite();
  Score best_winner_score = 0;
  std::size_t winner = 0;
  Score opt = 0;
  std::vector<DRepType> witness;   // lexicographically smallest optimal tuple
  std::uint64_t search_space = 0;  // dRep tuples evaluated
};

/// Exhaustive minimum ratio over all sets of at most `lambda` distinct dRep
/// types. Unordered sets are canonicalised; under FirstListed every ordering
/// of a set is evaluated because list position decides delegation.
/// Throws BudgetExceeded when the space is too large.
OracleCertificate brute_force_best(const Profile& profile, std::size_t lambda,
                                   TieBreak tiebreak, DelegationRule rule,
                                   const OracleOptions& options = {});

std::string certificate_to_json(const OracleCertificate& cert);

}  // namespace proxyvote
