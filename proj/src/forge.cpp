#include "proxyvote/forge.hpp"

#include <string>

#include "proxyvote/errors.hpp"

namespace proxyvote {

namespace {

void add_voter(Profile& p, const BitVector& intrinsic, const BitVector& revealed,
               std::size_t k) {
  Voter v;
  v.id = static_cast<std::int64_t>(p.voters.size()) + 1;
  v.k = k;
  v.intrinsic = intrinsic;
  v.revealed = revealed;
  p.voters.push_back(std::move(v));
}

void add_voter(Profile& p, std::string_view intrinsic, std::string_view revealed,
               std::size_t k) {
  auto v = Voter::from_strings(static_cast<std::int64_t>(p.voters.size()) + 1, intrinsic,
                               revealed, k);
  p.voters.push_back(std::move(v));
}

}  // namespace

Profile gen_attraction_gap(std::size_t n) {
  if (n < 2) throw ModelError("attraction-gap needs n >= 2");
  Profile p;
  p.m = 4;
  add_voter(p, "1100", "-100", 0);
  for (std::size_t i = 1; i < n; ++i) add_voter(p, "1011", "-011", 0);
  return p;
}

Profile gen_adversarial_tie(std::size_t n, std::size_t m) {
  if (n < 1 || m < 2) throw ModelError("adversarial-tie needs n >= 1 and m >= 2");
  Profile p;
  p.m = m;
  BitVector intrinsic(m, true);
  intrinsic.reset(1);
  BitVector revealed(m, true);
  revealed.reset(0);
  for (std::size_t i = 0; i < n; ++i) add_voter(p, intrinsic, revealed, 0);
  return p;
}

Profile gen_omega_n(std::size_t m, std::size_t k) {
  if (m <= 3 || m % 2 == 0) throw ModelError("omega-n needs an odd m > 3");
  if (k > 2) throw ModelError("omega-n reluctance cannot exceed the pair size 2");
  Profile p;
  p.m = m;
  const std::size_t last = m - 1;
  for (std::size_t a = 0; a + 1 < last; a += 2) {
    BitVector revealed(m);
    revealed.set(a);
    revealed.set(a + 1);
    BitVector both(m);
    both.set(a);
    both.set(a + 1);
    both.set(last);
    BitVector first_only(m);
    first_only.set(a);
    first_only.set(last);
    add_voter(p, both, revealed, k);
    add_voter(p, first_only, revealed, k);
  }
  return p;
}

Profile gen_copy_refined(std::size_t m, std::size_t r, std::size_t k) {
  if (r < 2) throw ModelError("copy-refined needs r >= 2");
  const auto base = gen_omega_n(m, k);
  Profile p;
  p.m = m;
  for (std::size_t i = 0; i < base.voters.size(); ++i) {
    // Position i is voter i+1: odd-numbered voters get floor(r/2) copies.
    const std::size_t copies = i % 2 == 0 ? r / 2 : (r + 1) / 2;
    for (std::size_t c = 0; c < copies; ++c) {
      add_voter(p, base.voters[i].intrinsic, base.voters[i].revealed, k);
    }
  }
  return p;
}

Profile gen_16_lower() {
  Profile p;
  p.m = 4;
  for (const char* tail : {"110", "101", "011", "100", "010", "001", "111", "111"}) {
    add_voter(p, std::string("1") + tail, std::string("-") + tail, 0);
  }
  return p;
}

Profile gen_2eps_revealed() {
  Profile p;
  p.m = 2;
  add_voter(p, "11", "-1", 0);
  add_voter(p, "10", "-0", 0);
  return p;
}

Profile gen_2eps_general(std::size_t k) {
  if (k < 1 || k > 20) throw ModelError("two-eps-general needs 1 <= k <= 20");
  const std::size_t n = std::size_t{1} << k;
  Profile p;
  p.m = k + 2;
  BitVector revealed(p.m, true);
  revealed.reset(0);
  for (std::size_t v = 0; v < n; ++v) {
    BitVector intrinsic(p.m);
    intrinsic.set(0);
    for (std::size_t b = 0; b < k; ++b) {
      if (((v >> (k - 1 - b)) & 1U) == 0) intrinsic.set(1 + b);
    }
    add_voter(p, intrinsic, revealed, k);
  }
  return p;
}

Profile gen_large_k(std::size_t n, std::size_t c) {
  if (n < 4 || c < 1) throw ModelError("large-k needs n >= 4 and c >= 1");
  Profile p;
  p.m = (n - 1) * (c + 1) + 1;
  const std::size_t last = p.m - 1;
  const std::size_t k = p.m - 1 - 2 * c;
  BitVector revealed(p.m, true);
  revealed.reset(last);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    BitVector intrinsic(p.m);
    for (std::size_t j = i * (c + 1); j < (i + 1) * (c + 1); ++j) intrinsic.set(j);
    intrinsic.set(last);
    add_voter(p, intrinsic, revealed, k);
  }
  add_voter(p, BitVector(p.m, true), revealed, k);
  return p;
}

void MavInstance::validate() const {
  if (m == 0 || m % 2 != 0) throw ModelError("MAV instance needs an even m >= 2");
  if (ballots.empty()) throw ModelError("MAV instance has no ballots");
  for (const auto& b : ballots) {
    if (b.size() != m) throw ModelError("MAV ballot length differs from m");
  }
}

ReducedInstance mav_reduce(const MavInstance& mav) {
  mav.validate();
  const std::size_t m = mav.m;
  const std::size_t n = mav.ballots.size();
  ReducedInstance out;
  out.profile.m = m + 3;
  out.target_proposal = m;
  out.target_score = static_cast<Score>(n) + 2;

  BitVector head(m + 3);
  for (std::size_t j = 0; j < m; ++j) head.set(j);
  for (const auto& ballot : mav.ballots) {
    BitVector intrinsic(m + 3);
    for (auto j : ballot.indices()) intrinsic.set(j);
    intrinsic.set(m);
    add_voter(out.profile, intrinsic, head, 0);
  }
  BitVector tail3(m + 3);
  tail3.set(m);
  tail3.set(m + 1);
  tail3.set(m + 2);
  for (int s = 0; s < 2; ++s) add_voter(out.profile, tail3, tail3, 0);
  BitVector tail2(m + 3);
  tail2.set(m + 1);
  tail2.set(m + 2);
  for (std::size_t d = 0; d + 1 < n; ++d) add_voter(out.profile, tail2, tail2, 0);
  return out;
}

std::optional<BitVector> mav_solve(const MavInstance& mav, std::uint64_t budget) {
  mav.validate();
  if (mav.m > 62 || (std::uint64_t{1} << mav.m) > budget) {
    throw BudgetExceeded("MAV search space 2^" + std::to_string(mav.m) + " exceeds budget");
  }
  const BitVector everything(mav.m, true);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << mav.m); ++code) {
    auto center = BitVector::from_code(code, mav.m);
    bool ok = true;
    for (const auto& b : mav.ballots) {
      if (BitVector::masked_mismatch(center, b, everything) > mav.theta()) {
        ok = false;
        break;
      }
    }
    if (ok) return center;
  }
  return std::nullopt;
}

}  // namespace proxyvote
