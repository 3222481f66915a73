#include "proxyvote/oracle.hpp"

#include <algorithm>
#include <thread>

#include <json.hpp>

#include "proxyvote/errors.hpp"

namespace proxyvote {

namespace {

struct Candidate {
  Ratio ratio = Ratio::infinite();
  Score score = 0;
  std::size_t winner = 0;
  std::vector<std::uint64_t> tuple;
  bool valid = false;
  std::uint64_t examined = 0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.ratio != b.ratio) return a.ratio < b.ratio;
  return a.tuple < b.tuple;
}

class Evaluator {
 public:
  Evaluator(const Profile& profile, TieBreak tiebreak, DelegationRule rule)
      : profile_(profile), tiebreak_(tiebreak), rule_(rule) {
    intrinsic_ = intrinsic_scores(profile);
    key_ = tiebreak == TieBreak::RevealedBest ? revealed_scores(profile) : intrinsic_;
    opt_ = *std::max_element(intrinsic_.begin(), intrinsic_.end());
  }

  Score opt() const { return opt_; }

  void consider(const std::vector<std::uint64_t>& tuple, Candidate& best) const {
    std::vector<DRepType> dreps;
    dreps.reserve(tuple.size());
    for (auto code : tuple) dreps.push_back({BitVector::from_code(code, profile_.m)});
    const auto assignment = assign_delegations(profile_, dreps, rule_);
    const auto counted = scores(profile_, dreps, assignment);
    Candidate c;
    c.winner = winner(counted, tiebreak_, key_);
    c.score = intrinsic_[c.winner];
    c.ratio = Ratio::of(opt_, c.score);
    c.tuple = tuple;
    c.valid = true;
    ++best.examined;
    if (better(c, best)) {
      const auto examined = best.examined;
      best = std::move(c);
      best.examined = examined;
    }
  }

 private:
  const Profile& profile_;
  TieBreak tiebreak_;
  DelegationRule rule_;
  ScoreVector intrinsic_;
  ScoreVector key_;
  Score opt_ = 0;
};

// Visits every ascending tuple of `size` codes below `limit` starting with `first`.
void visit_from(const Evaluator& eval, std::uint64_t first, std::size_t size,
                std::uint64_t limit, bool all_orders, Candidate& best) {
  std::vector<std::uint64_t> tuple{first};
  auto emit = [&](const std::vector<std::uint64_t>& sorted) {
    if (!all_orders || sorted.size() < 2) {
      eval.consider(sorted, best);
      return;
    }
    auto perm = sorted;
    do {
      eval.consider(perm, best);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  if (size == 1) {
    emit(tuple);
    return;
  }
  // Iterative ascending combination extension.
  tuple.resize(size);
  for (std::size_t p = 1; p < size; ++p) tuple[p] = tuple[p - 1] + 1;
  if (tuple.back() >= limit) return;
  while (true) {
    emit(tuple);
    std::size_t p = size - 1;
    while (p >= 1 && tuple[p] == limit - (size - p)) --p;
    if (p == 0) return;
    ++tuple[p];
    for (std::size_t q = p + 1; q < size; ++q) tuple[q] = tuple[q - 1] + 1;
  }
}

}  // namespace

OracleCertificate brute_force_best(const Profile& profile, std::size_t lambda,
                                   TieBreak tiebreak, DelegationRule rule,
                                   const OracleOptions& options) {
  profile.validate();
  const auto bits = static_cast<unsigned __int128>(lambda) * profile.m;
  if (profile.m > 62 || bits > 63 || (std::uint64_t{1} << bits) > options.budget) {
    throw BudgetExceeded("oracle space 2^" + std::to_string(static_cast<std::uint64_t>(bits)) +
                         " exceeds budget " + std::to_string(options.budget));
  }
  const std::uint64_t types = std::uint64_t{1} << profile.m;
  const Evaluator eval(profile, tiebreak, rule);
  const bool all_orders = rule == DelegationRule::FirstListed;

  Candidate best;
  if (!options.exact_size || lambda == 0) eval.consider({}, best);

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1U, workers);
  const std::size_t max_size = std::min<std::uint64_t>(lambda, types);
  for (std::size_t size = options.exact_size ? max_size : 1; size <= max_size; ++size) {
    if (size == 0) continue;
    std::vector<Candidate> partial(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t first = w; first < types; first += workers) {
          visit_from(eval, first, size, types, all_orders, partial[w]);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& p : partial) {
      const auto examined = best.examined + p.examined;
      if (better(p, best)) best = std::move(p);
      best.examined = examined;
    }
  }

  OracleCertificate cert;
  cert.best_ratio = best.ratio;
  cert.best_winner_score = best.score;
  cert.winner = best.winner;
  cert.opt = eval.opt();
  cert.search_space = best.examined;
  for (auto code : best.tuple) cert.witness.push_back({BitVector::from_code(code, profile.m)});
  return cert;
}

std::string certificate_to_json(const OracleCertificate& cert) {
  nlohmann::ordered_json doc;
  doc["best_ratio"] = cert.best_ratio.to_string();
  doc["best_winner_score"] = cert.best_winner_score;
  doc["winner"] = cert.winner;
  doc["opt"] = cert.opt;
  doc["witness"] = nlohmann::ordered_json::array();
  for (const auto& t : cert.witness) doc["witness"].push_back(t.to_string());
  doc["search_space"] = cert.search_space;
  return doc.dump(2) + "\n";
}

}  // namespace proxyvote
