#include "proxyvote/profile.hpp"

#include <unordered_set>

#include "proxyvote/errors.hpp"

namespace proxyvote {

Voter Voter::from_strings(std::int64_t id, std::string_view intrinsic,
                          std::string_view revealed, std::size_t k, std::int64_t weight) {
  if (intrinsic.size() != revealed.size()) {
    throw ModelError("voter " + std::to_string(id) + ": intrinsic and revealed lengths differ");
  }
  Voter v;
  v.id = id;
  v.weight = weight;
  v.k = k;
  v.intrinsic = BitVector::from_string(intrinsic);
  v.revealed = BitVector(revealed.size());
  for (std::size_t j = 0; j < revealed.size(); ++j) {
    const char c = revealed[j];
    if (c == '-') continue;
    if (c != '0' && c != '1') {
      throw ModelError("voter " + std::to_string(id) + ": invalid revealed character '" +
                       std::string(1, c) + "'");
    }
    if ((c == '1') != v.intrinsic.test(j)) {
      throw ModelError("voter " + std::to_string(id) + ": revealed vote on proposal " +
                       std::to_string(j) + " contradicts intrinsic vote");
    }
    v.revealed.set(j);
  }
  return v;
}

Vote Voter::revealed_vote(std::size_t proposal) const {
  if (!revealed.test(proposal)) return Vote::Unknown;
  return intrinsic.test(proposal) ? Vote::Approve : Vote::Reject;
}

std::size_t Voter::threshold() const noexcept {
  const std::size_t mi = revealed_count();
  return mi >= k ? (mi - k) / 2 : 0;
}

std::string Voter::revealed_string() const {
  std::string out(revealed.size(), '-');
  for (std::size_t j = 0; j < revealed.size(); ++j) {
    if (revealed.test(j)) out[j] = intrinsic.test(j) ? '1' : '0';
  }
  return out;
}

std::int64_t Profile::total_weight() const noexcept {
  std::int64_t total = 0;
  for (const auto& v : voters) total += v.weight;
  return total;
}

void Profile::validate() const {
  if (m == 0) throw ModelError("profile has no proposals");
  if (voters.empty()) throw ModelError("profile has no voters");
  std::unordered_set<std::int64_t> ids;
  for (const auto& v : voters) {
    const std::string who = "voter " + std::to_string(v.id);
    if (!ids.insert(v.id).second) throw ModelError(who + ": duplicate id");
    if (v.intrinsic.size() != m || v.revealed.size() != m) {
      throw ModelError(who + ": ballot length differs from m=" + std::to_string(m));
    }
    if (v.weight < 1) throw ModelError(who + ": weight must be >= 1");
    const auto mi = v.revealed_count();
    if (mi == 0) throw ModelError(who + ": empty revealed set");
    if (v.k > mi) {
      throw ModelError(who + ": k=" + std::to_string(v.k) + " exceeds m_i=" + std::to_string(mi));
    }
  }
}

}  // namespace proxyvote
