#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "proxyvote/bench/completion.hpp"
#include "proxyvote/bench/dataset.hpp"
#include "proxyvote/bench/sampling.hpp"

namespace proxyvote::bench {

struct SweepConfig {
  std::size_t lambda_max = 20;
  std::vector<double> k_ratio_grid = {0.0, 0.1, 0.2, 0.3, 0.4};
  std::vector<double> reveal_ratio_grid = {0.2, 0.4, 0.6, 0.8};
  double fixed_k_ratio = 0.2;       // used along the reveal grid
  double fixed_reveal_ratio = 0.4;  // used along the k grid
  std::size_t repetitions = 20;
  std::uint64_t seed = 0;
  SampleConfig sample;
  ExponentSign exponent_sign = ExponentSign::AsWritten;
  RevealBase reveal_base = RevealBase::Completed;
  bool scale_k = true;
  bool shuffle_proposals = false;
  std::size_t workers = 0;  // 0 = hardware concurrency

  /// Throws ModelError on empty grids, out-of-range ratios or zero repetitions.
  void validate() const;
};

/// Reads a JSON object whose keys are the SweepConfig field names (sample
/// fields inline: user_sample, item_sample, min_review_frac, max_review_frac).
/// Missing keys keep their defaults; unknown keys are rejected.
SweepConfig parse_sweep_config(const std::string& json_text);
SweepConfig read_sweep_config(const std::filesystem::path& path);

struct SweepRecord {
  std::size_t lambda = 0;
  double k_ratio = 0.0;
  double reveal_ratio = 0.0;
  std::size_t rep = 0;
  double delegated_fraction = 0.0;
  double approx_ratio = 1.0;  // +infinity when the winner has intrinsic score 0
  std::size_t winner_index = 0;
};

/// Stable 64-bit mix of the given words.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words);

/// Runs every (k_ratio, reveal_ratio) cell of the two one-dimensional sweeps for
/// every repetition and lambda = 0..lambda_max (lambda = 0 is plain direct
/// voting). Output is sorted by (lambda, k_ratio, reveal_ratio, rep) and does
/// not depend on the worker count.
std::vector<SweepRecord> run_sweep(const Dataset& data, const SweepConfig& config);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_sweep_csv(std::istream& in);

}  // namespace proxyvote::bench
