#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "proxyvote/bitvector.hpp"

namespace proxyvote {

enum class Vote : std::uint8_t { Reject, Approve, Unknown };

/// A voter's ground truth. The revealed ballot is stored as a mask over the
/// intrinsic one, so a revealed vote can never disagree with the intrinsic vote.
struct Voter {
  std::int64_t id = 0;
  std::int64_t weight = 1;
  std::size_t k = 0;     // reluctance
  BitVector intrinsic;   // v_i
  BitVector revealed;    // R_i as a mask

  /// Builds a voter from "0/1" and "0/1/-" strings. Throws ModelError when a
  /// revealed entry contradicts the intrinsic one or lengths differ.
  static Voter from_strings(std::int64_t id, std::string_view intrinsic,
                            std::string_view revealed, std::size_t k = 0,
                            std::int64_t weight = 1);

  std::size_t revealed_count() const noexcept { return revealed.count(); }
  Vote revealed_vote(std::size_t proposal) const;
  bool approves(std::size_t proposal) const { return intrinsic.test(proposal); }

  /// floor((m_i - k_i) / 2)
  std::size_t threshold() const noexcept;

  std::string intrinsic_string() const { return intrinsic.to_string(); }
  std::string revealed_string() const;
};

struct Profile {
  std::size_t m = 0;
  std::vector<Voter> voters;

  std::size_t n() const noexcept { return voters.size(); }
  std::int64_t total_weight() const noexcept;

  /// Throws ModelError unless: m >= 1, n >= 1, every ballot has length m,
  /// weights >= 1, m_i >= 1, k_i <= m_i, ids unique.
  void validate() const;
};

/// A dRep's advertised type: one {0,1} vote per proposal.
struct DRepType {
  BitVector advertised;

  static DRepType from_string(std::string_view bits) { return {BitVector::from_string(bits)}; }
  std::size_t size() const noexcept { return advertised.size(); }
  bool approves(std::size_t proposal) const { return advertised.test(proposal); }
  std::string to_string() const { return advertised.to_string(); }

  friend bool operator==(const DRepType&, const DRepType&) = default;
  friend auto operator<=>(const DRepType& a, const DRepType& b) { return a.advertised <=> b.advertised; }
};

}  // namespace proxyvote
