#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "proxyvote/election.hpp"
#include "proxyvote/profile.hpp"

namespace proxyvote {

enum class ConstructionKind {
  None,
  DRep0,
  AllOnes,
  AllZeros,
  MajorityPair,
  CoherentFamily,
  MultiGroupFamily,
  MirrorAll,
  Greedy,
  BruteForce,
};

/// Parsed form of `<kind>[:key=value,...]`, e.g. `greedy:lambda=3`,
/// `coherent-family:core=2+3`, `multi-group:k=1,zeta=2`.
struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::None;
  std::vector<std::size_t> core;  // coherent-family: explicit S_k
  std::size_t k = 0;              // coherent-family (without core), multi-group
  std::size_t zeta = 1;           // multi-group
  std::size_t lambda = 1;         // greedy, brute-force
};

/// Throws ModelError on unknown kinds, unknown keys, or malformed values.
ConstructionSpec parse_construction(std::string_view text);
std::string to_string(ConstructionKind kind);

/// Materialises the dRep list. Brute force picks the oracle's witness under
/// the given rule and tie-break.
std::vector<DRepType> build_dreps(const Profile& profile, const ConstructionSpec& spec,
                                  DelegationRule rule, TieBreak tiebreak);

}  // namespace proxyvote
