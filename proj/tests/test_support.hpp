#pragma once

// Seeded profile generators and a from-scratch reference election used as an
// independent oracle by the unit and acceptance suites.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "proxyvote/election.hpp"
#include "proxyvote/profile.hpp"

namespace testing_support {

using proxyvote::BitVector;
using proxyvote::DRepType;
using proxyvote::Profile;
using proxyvote::Voter;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline BitVector random_bits(Rng& rng, std::size_t m) {
  BitVector b(m);
  for (std::size_t j = 0; j < m; ++j) b.set(j, rng.coin());
  return b;
}

inline BitVector random_mask(Rng& rng, std::size_t m, std::size_t at_least) {
  BitVector mask = random_bits(rng, m);
  while (mask.count() < std::max<std::size_t>(at_least, 1)) mask.set(rng.uniform(0, m - 1));
  return mask;
}

/// Arbitrary profile: independent ballots and revealed sets. k_i is drawn from
/// [0, min(k_max, m_i)]; `full_reveal` makes every R_i = all proposals.
inline Profile random_profile(Rng& rng, std::size_t n, std::size_t m, std::size_t k_max,
                              bool full_reveal = false, std::int64_t max_weight = 1) {
  Profile p;
  p.m = m;
  for (std::size_t i = 0; i < n; ++i) {
    Voter v;
    v.id = static_cast<std::int64_t>(i + 1);
    v.weight = static_cast<std::int64_t>(rng.uniform(1, static_cast<std::size_t>(max_weight)));
    v.intrinsic = random_bits(rng, m);
    v.revealed = full_reveal ? ~BitVector(m) : random_mask(rng, m, 1);
    v.k = rng.uniform(0, std::min(k_max, v.revealed.count()));
    p.voters.push_back(std::move(v));
  }
  return p;
}

/// Coherent profile: one shared revealed set of size >= max(k, 1), uniform k.
inline Profile random_coherent_profile(Rng& rng, std::size_t n, std::size_t m, std::size_t k,
                                       std::int64_t max_weight = 1) {
  Profile p;
  p.m = m;
  const BitVector shared = random_mask(rng, m, k);
  for (std::size_t i = 0; i < n; ++i) {
    Voter v;
    v.id = static_cast<std::int64_t>(i + 1);
    v.weight = static_cast<std::int64_t>(rng.uniform(1, static_cast<std::size_t>(max_weight)));
    v.intrinsic = random_bits(rng, m);
    v.revealed = shared;
    v.k = k;
    p.voters.push_back(std::move(v));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Reference election on plain integer vectors, written directly from the
// model definitions without the library's BitVector or election code.

struct RefOutcome {
  std::size_t winner = 0;
  long long winner_intrinsic = 0;
  long long opt = 0;
  long long delegated = 0;
};

enum class RefRule { FirstListed, Nearest };
enum class RefTie { IntrinsicBest, RevealedBest, Adversarial };

inline RefOutcome ref_election(const Profile& p, const std::vector<std::vector<int>>& dreps,
                               RefRule rule, RefTie tie) {
  const std::size_t m = p.m;
  std::vector<long long> counted(m, 0), intrinsic(m, 0), revealed(m, 0);
  std::vector<long long> drep_weight(dreps.size(), 0);
  RefOutcome out;
  for (const auto& v : p.voters) {
    std::vector<int> ballot(m), mask(m);
    int mi = 0;
    for (std::size_t j = 0; j < m; ++j) {
      ballot[j] = v.intrinsic.test(j) ? 1 : 0;
      mask[j] = v.revealed.test(j) ? 1 : 0;
      mi += mask[j];
      intrinsic[j] += v.weight * ballot[j];
      revealed[j] += v.weight * (mask[j] & ballot[j]);
    }
    const int allowed = (mi - static_cast<int>(v.k)) / 2;  // mi >= k
    std::optional<std::size_t> pick;
    int best = 1 << 30;
    for (std::size_t d = 0; d < dreps.size(); ++d) {
      int dist = 0;
      for (std::size_t j = 0; j < m; ++j) dist += mask[j] && dreps[d][j] != ballot[j];
      if (dist > allowed) continue;
      if (rule == RefRule::FirstListed) {
        pick = d;
        break;
      }
      if (dist < best) {
        best = dist;
        pick = d;
      }
    }
    if (pick) {
      drep_weight[*pick] += v.weight;
      out.delegated += v.weight;
    } else {
      for (std::size_t j = 0; j < m; ++j) counted[j] += v.weight * (mask[j] & ballot[j]);
    }
  }
  for (std::size_t d = 0; d < dreps.size(); ++d) {
    for (std::size_t j = 0; j < m; ++j) counted[j] += drep_weight[d] * dreps[d][j];
  }
  const long long top = *std::max_element(counted.begin(), counted.end());
  std::optional<std::size_t> w;
  for (std::size_t j = 0; j < m; ++j) {
    if (counted[j] != top) continue;
    if (!w) {
      w = j;
      continue;
    }
    const auto& key = tie == RefTie::RevealedBest ? revealed : intrinsic;
    const bool better = tie == RefTie::Adversarial ? key[j] < key[*w] : key[j] > key[*w];
    if (better) w = j;
  }
  out.winner = *w;
  out.winner_intrinsic = intrinsic[*w];
  out.opt = *std::max_element(intrinsic.begin(), intrinsic.end());
  return out;
}

inline std::vector<int> type_of_code(std::uint64_t code, std::size_t m) {
  std::vector<int> t(m);
  for (std::size_t j = 0; j < m; ++j) t[j] = static_cast<int>((code >> (m - 1 - j)) & 1U);
  return t;
}

inline std::vector<int> to_ints(const DRepType& d) {
  std::vector<int> t(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) t[j] = d.approves(j) ? 1 : 0;
  return t;
}

/// Best winner intrinsic score over every ordered list of at most `lambda`
/// types, repeats allowed.
inline long long ref_best_winner_score(const Profile& p, std::size_t lambda, RefRule rule,
                                       RefTie tie) {
  const std::uint64_t types = std::uint64_t{1} << p.m;
  long long best = ref_election(p, {}, rule, tie).winner_intrinsic;
  std::vector<std::uint64_t> codes;
  auto recurse = [&](auto&& self) -> void {
    if (!codes.empty()) {
      std::vector<std::vector<int>> dreps;
      for (auto c : codes) dreps.push_back(type_of_code(c, p.m));
      best = std::max(best, ref_election(p, dreps, rule, tie).winner_intrinsic);
    }
    if (codes.size() == lambda) return;
    for (std::uint64_t c = 0; c < types; ++c) {
      codes.push_back(c);
      self(self);
      codes.pop_back();
    }
  };
  recurse(recurse);
  return best;
}

}  // namespace testing_support
