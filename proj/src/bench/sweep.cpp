#include "proxyvote/bench/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "proxyvote/bench/csv.hpp"
#include "proxyvote/drep_lab.hpp"
#include "proxyvote/election.hpp"
#include "proxyvote/errors.hpp"

namespace proxyvote::bench {
namespace {

constexpr std::array<std::string_view, 7> kCsvHeader = {
    "lambda", "k_ratio", "reveal_ratio", "rep", "delegated_fraction", "approx_ratio",
    "winner_index"};

constexpr std::uint64_t kSampleTag = 0x73616d706c65ULL;
constexpr std::uint64_t kHideTag = 0x68696465ULL;
constexpr std::uint64_t kOrderTag = 0x6f72646572ULL;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t bits(double value) { return std::bit_cast<std::uint64_t>(value); }

struct Cell {
  double k_ratio;
  double reveal_ratio;
  auto operator<=>(const Cell&) const = default;
};

std::vector<Cell> cells_of(const SweepConfig& config) {
  std::vector<Cell> cells;
  for (double k : config.k_ratio_grid) cells.push_back({k, config.fixed_reveal_ratio});
  for (double r : config.reveal_ratio_grid) cells.push_back({config.fixed_k_ratio, r});
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

std::vector<SweepRecord> run_repetition(const Dataset& data, const SweepConfig& config,
                                        const std::vector<Cell>& cells, std::size_t rep) {
  const auto sample = sample_and_filter(data, config.sample,
                                        derive_seed({config.seed, kSampleTag, rep}));
  const Profile base = build_profile(data, sample, config.exponent_sign, config.reveal_base);

  GreedyOptions options;
  options.scale_k = config.scale_k;
  if (config.shuffle_proposals) {
    options.proposal_order.resize(sample.items.size());
    std::iota(options.proposal_order.begin(), options.proposal_order.end(), std::size_t{0});
    std::mt19937_64 rng(derive_seed({config.seed, kOrderTag, rep}));
    std::shuffle(options.proposal_order.begin(), options.proposal_order.end(), rng);
    options.proposal_order.push_back(sample.unanimity_index());
  }

  std::vector<SweepRecord> out;
  std::map<std::uint64_t, Profile> hidden;
  for (const auto& cell : cells) {
    auto it = hidden.find(bits(cell.reveal_ratio));
    if (it == hidden.end()) {
      const auto seed = derive_seed({config.seed, kHideTag, bits(cell.reveal_ratio), rep});
      it = hidden.emplace(bits(cell.reveal_ratio), hide_coordinates(base, cell.reveal_ratio, seed))
               .first;
    }
    Profile profile = it->second;
    for (auto& v : profile.voters) {
      const double scaled = cell.k_ratio * static_cast<double>(v.revealed_count());
      v.k = static_cast<std::size_t>(std::floor(scaled + 1e-9));
    }

    const auto dreps = greedy(profile, std::max<std::size_t>(config.lambda_max, 1), options);
    const double total = static_cast<double>(profile.total_weight());
    for (std::size_t lambda = 0; lambda <= config.lambda_max; ++lambda) {
      const std::span<const DRepType> prefix(dreps.data(), std::min(lambda, dreps.size()));
      const auto result = run_election(profile, prefix, DelegationRule::NearestHamming,
                                       TieBreak::IntrinsicBest);
      SweepRecord rec;
      rec.lambda = lambda;
      rec.k_ratio = cell.k_ratio;
      rec.reveal_ratio = cell.reveal_ratio;
      rec.rep = rep;
      rec.delegated_fraction = static_cast<double>(result.delegated_weight(profile)) / total;
      rec.approx_ratio = result.ratio.is_infinite() ? std::numeric_limits<double>::infinity()
                                                    : result.ratio.to_double();
      rec.winner_index = result.winner;
      out.push_back(rec);
    }
  }
  return out;
}

std::string fixed6(double value) {
  if (std::isinf(value)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

template <typename T>
T take(const nlohmann::json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

}  // namespace

void SweepConfig::validate() const {
  if (k_ratio_grid.empty() || reveal_ratio_grid.empty()) {
    throw ModelError("sweep grids must be non-empty");
  }
  if (repetitions < 1) throw ModelError("repetitions must be at least 1");
  auto k_ok = [](double k) { return k >= 0.0 && k <= 0.4; };
  auto r_ok = [](double r) { return r > 0.0 && r <= 0.8; };
  for (double k : k_ratio_grid) {
    if (!k_ok(k)) throw ModelError("k_ratio outside [0, 0.4]");
  }
  for (double r : reveal_ratio_grid) {
    if (!r_ok(r)) throw ModelError("reveal_ratio outside (0, 0.8]");
  }
  if (!k_ok(fixed_k_ratio)) throw ModelError("fixed_k_ratio outside [0, 0.4]");
  if (!r_ok(fixed_reveal_ratio)) throw ModelError("fixed_reveal_ratio outside (0, 0.8]");
  if (sample.user_sample == 0 || sample.item_sample == 0) {
    throw ModelError("sample sizes must be positive");
  }
}

SweepConfig parse_sweep_config(const std::string& json_text) {
  static const std::vector<std::string> known = {
      "lambda_max",         "k_ratio_grid",    "reveal_ratio_grid", "fixed_k_ratio",
      "fixed_reveal_ratio", "repetitions",     "seed",              "user_sample",
      "item_sample",        "min_review_frac", "max_review_frac",   "exponent_sign",
      "reveal_base",        "scale_k",         "shuffle_proposals", "workers"};
  SweepConfig c;
  try {
    const auto j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw ModelError("sweep config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw ModelError("unknown sweep config key '" + key + "'");
      }
    }
    c.lambda_max = take(j, "lambda_max", c.lambda_max);
    c.k_ratio_grid = take(j, "k_ratio_grid", c.k_ratio_grid);
    c.reveal_ratio_grid = take(j, "reveal_ratio_grid", c.reveal_ratio_grid);
    c.fixed_k_ratio = take(j, "fixed_k_ratio", c.fixed_k_ratio);
    c.fixed_reveal_ratio = take(j, "fixed_reveal_ratio", c.fixed_reveal_ratio);
    c.repetitions = take(j, "repetitions", c.repetitions);
    c.seed = take(j, "seed", c.seed);
    c.sample.user_sample = take(j, "user_sample", c.sample.user_sample);
    c.sample.item_sample = take(j, "item_sample", c.sample.item_sample);
    c.sample.min_review_frac = take(j, "min_review_frac", c.sample.min_review_frac);
    c.sample.max_review_frac = take(j, "max_review_frac", c.sample.max_review_frac);
    if (j.contains("exponent_sign")) {
      c.exponent_sign = parse_exponent_sign(j.at("exponent_sign").get<std::string>());
    }
    if (j.contains("reveal_base")) {
      const auto base = j.at("reveal_base").get<std::string>();
      if (base == "reviewed") {
        c.reveal_base = RevealBase::Reviewed;
      } else if (base == "completed") {
        c.reveal_base = RevealBase::Completed;
      } else {
        throw ModelError("unknown reveal_base '" + base + "'");
      }
    }
    c.scale_k = take(j, "scale_k", c.scale_k);
    c.shuffle_proposals = take(j, "shuffle_proposals", c.shuffle_proposals);
    c.workers = take(j, "workers", c.workers);
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("bad sweep config: ") + e.what());
  }
  c.validate();
  return c;
}

SweepConfig read_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sweep_config(ss.str());
}

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (auto w : words) h = splitmix(h ^ splitmix(w));
  return h;
}

std::vector<SweepRecord> run_sweep(const Dataset& data, const SweepConfig& config) {
  config.validate();
  const auto cells = cells_of(config);
  std::vector<std::vector<SweepRecord>> per_rep(config.repetitions);
  std::vector<std::exception_ptr> errors(config.repetitions);

  std::size_t workers = config.workers == 0 ? std::thread::hardware_concurrency() : config.workers;
  workers = std::clamp<std::size_t>(workers, 1, config.repetitions);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t rep = next++; rep < config.repetitions; rep = next++) {
      try {
        per_rep[rep] = run_repetition(data, config, cells, rep);
      } catch (...) {
        errors[rep] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<SweepRecord> out;
  for (auto& rows : per_rep) out.insert(out.end(), rows.begin(), rows.end());
  std::sort(out.begin(), out.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::tie(a.lambda, a.k_ratio, a.reveal_ratio, a.rep) <
           std::tie(b.lambda, b.k_ratio, b.reveal_ratio, b.rep);
  });
  return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  for (std::size_t c = 0; c < kCsvHeader.size(); ++c) {
    out << (c ? "," : "") << kCsvHeader[c];
  }
  out << '\n';
  for (const auto& r : records) {
    out << r.lambda << ',' << fixed6(r.k_ratio) << ',' << fixed6(r.reveal_ratio) << ',' << r.rep
        << ',' << fixed6(r.delegated_fraction) << ',' << fixed6(r.approx_ratio) << ','
        << r.winner_index << '\n';
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::vector<SweepRecord> out;
  for (const auto& row : read_csv(in, kCsvHeader)) {
    const auto& f = row.fields;
    auto count = [&](const std::string& s) {
      const auto v = parse_integer(s, row.line);
      if (v < 0) throw ParseError("negative count '" + s + "'", row.line);
      return static_cast<std::size_t>(v);
    };
    SweepRecord r;
    r.lambda = count(f[0]);
    r.k_ratio = parse_double(f[1], row.line);
    r.reveal_ratio = parse_double(f[2], row.line);
    r.rep = count(f[3]);
    r.delegated_fraction = parse_double(f[4], row.line);
    r.approx_ratio =
        f[5] == "inf" ? std::numeric_limits<double>::infinity() : parse_double(f[5], row.line);
    r.winner_index = count(f[6]);
    out.push_back(r);
  }
  return out;
}

}  // namespace proxyvote::bench
