#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "proxyvote/bitvector.hpp"
#include "proxyvote/election.hpp"
#include "proxyvote/profile.hpp"

namespace proxyvote {

// Deterministic lower-bound and fixture instances. Proposals are 0-based
// here; voter ids are 1-based in generation order.

/// 4 proposals; I1 hidden and approved by all; voter 1 reveals I2..I4 = 100,
/// voters 2..n reveal 011. k = 0.
Profile gen_attraction_gap(std::size_t n);

/// Everyone approves every proposal except I2; only I1 is hidden. k = 0.
Profile gen_adversarial_tie(std::size_t n, std::size_t m);

/// Odd m > 3, n = m - 1 voters in pairs over proposal pairs {2p, 2p+1}; the
/// last proposal is hidden and approved by everyone. Uniform reluctance `k`.
Profile gen_omega_n(std::size_t m, std::size_t k = 1);

/// gen_omega_n with floor(r/2) copies of each odd-numbered and ceil(r/2) of
/// each even-numbered voter, so every coherent set has size r.
Profile gen_copy_refined(std::size_t m, std::size_t r, std::size_t k = 1);

/// The 8-voter, 4-proposal instance bounding a single dRep at 8/5.
Profile gen_16_lower();

/// 2 voters, 2 proposals: c1 hidden and approved by both, c2 revealed 1 / 0.
Profile gen_2eps_revealed();

/// Coherent instance with n = 2^k voters, m = k + 2 proposals and reluctance
/// k: proposal 1 hidden and unanimous, k dyadic splits, a last proposal
/// nobody approves. Any single dRep attracts at most one voter.
Profile gen_2eps_general(std::size_t k);

/// Coherent instance with m = (n-1)(c+1) + 1 and k = m - 1 - 2c. Voter i < n
/// approves the i-th block of c+1 proposals, voter n approves every revealed
/// proposal, the last proposal is hidden and unanimous.
Profile gen_large_k(std::size_t n, std::size_t c);

struct MavInstance {
  std::size_t m = 0;  // even
  std::vector<BitVector> ballots;

  std::size_t theta() const noexcept { return m / 2; }
  void validate() const;
};

struct ReducedInstance {
  Profile profile;
  std::size_t target_proposal = 0;  // c_{m+1}
  Score target_score = 0;           // r = n + 2
  TieBreak tiebreak = TieBreak::RevealedBest;
};

/// Single-dRep instance that can elect c_{m+1} iff the MAV instance has a
/// center within radius m/2.
ReducedInstance mav_reduce(const MavInstance& mav);

/// Exhaustive search for a center within radius theta (first in lexicographic
/// order). Throws BudgetExceeded when 2^m exceeds `budget`.
std::optional<BitVector> mav_solve(const MavInstance& mav,
                                   std::uint64_t budget = std::uint64_t{1} << 24);

}  // namespace proxyvote
