#include "proxyvote/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "proxyvote/bench/dataset.hpp"
#include "proxyvote/bench/sweep.hpp"
#include "proxyvote/coherence.hpp"
#include "proxyvote/construction_spec.hpp"
#include "proxyvote/election.hpp"
#include "proxyvote/errors.hpp"
#include "proxyvote/forge.hpp"
#include "proxyvote/oracle.hpp"
#include "proxyvote/profile_json.hpp"

namespace proxyvote {
namespace {

namespace fs = std::filesystem;

std::string proposal_name(std::size_t index) { return "I" + std::to_string(index + 1); }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ModelError("cannot write " + path);
  file << text;
}

struct ForgeArgs {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 1;
  std::size_t r = 0;
  std::size_t c = 0;
  std::string ballots;
};

std::size_t need(std::size_t value, const char* flag, const std::string& name) {
  if (value == 0) throw CLI::ValidationError(name + " requires --" + flag);
  return value;
}

Profile forge(const ForgeArgs& a) {
  if (a.name == "attraction-gap") return gen_attraction_gap(need(a.n, "n", a.name));
  if (a.name == "adversarial-tie") {
    return gen_adversarial_tie(need(a.n, "n", a.name), need(a.m, "m", a.name));
  }
  if (a.name == "omega-n") return gen_omega_n(need(a.m, "m", a.name), a.k);
  if (a.name == "copy-refined") {
    return gen_copy_refined(need(a.m, "m", a.name), need(a.r, "r", a.name), a.k);
  }
  if (a.name == "16-lower") return gen_16_lower();
  if (a.name == "2eps-revealed") return gen_2eps_revealed();
  if (a.name == "2eps-general") return gen_2eps_general(a.k);
  if (a.name == "large-k") return gen_large_k(need(a.n, "n", a.name), need(a.c, "c", a.name));
  if (a.name == "mav-reduce") {
    if (a.ballots.empty()) throw CLI::ValidationError("mav-reduce requires --ballots");
    MavInstance mav;
    std::stringstream ss(a.ballots);
    std::string ballot;
    while (std::getline(ss, ballot, ',')) mav.ballots.push_back(BitVector::from_string(ballot));
    mav.m = mav.ballots.front().size();
    return mav_reduce(mav).profile;
  }
  throw CLI::ValidationError("unknown generator '" + a.name + "'");
}

int elect(const Profile& profile, const std::string& drep, const std::string& tiebreak_text,
          const std::string& rule_text, std::ostream& out) {
  const auto tiebreak = parse_tiebreak(tiebreak_text);
  const auto rule = parse_delegation_rule(rule_text);
  const auto spec = parse_construction(drep);
  const auto dreps = build_dreps(profile, spec, rule, tiebreak);
  const auto result = run_election(profile, dreps, rule, tiebreak);

  out << "dreps: " << dreps.size() << '\n';
  for (const auto& d : dreps) out << "  " << d.to_string() << '\n';
  out << "delegated: " << result.delegated_weight(profile) << '/' << profile.total_weight()
      << '\n';
  out << "winner: " << proposal_name(result.winner) << " (index " << result.winner << ")\n";
  out << "winner score: " << result.winner_intrinsic_score << '\n';
  out << "opt: " << result.opt << '\n';
  out << "ratio: " << result.ratio.to_string() << '\n';
  return 0;
}

fs::path data_file(const std::string& flag_value, const char* file_name) {
  if (!flag_value.empty()) return flag_value;
  const char* dir = std::getenv(kDataDirEnv);
  if (dir == nullptr) {
    throw CLI::ValidationError(std::string("no path given for ") + file_name + " and " +
                               kDataDirEnv + " is not set");
  }
  return fs::path(dir) / file_name;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proxy voting with incomplete ballots", "proxyvote"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::string profile_path;
  std::string output_path;

  auto* validate = app.add_subcommand("validate", "Check a profile file");
  validate->add_option("--profile", profile_path, "Profile JSON")->required();

  AnalyzeQuery query;
  auto* analyze_cmd = app.add_subcommand("analyze", "Coherence structure of a profile");
  analyze_cmd->add_option("--profile", profile_path, "Profile JSON")->required();
  analyze_cmd->add_option("--k", query.k, "Partition into (k, m-k)-coherent cells");
  analyze_cmd->add_option("--x", query.x, "Core size for (x, delta)-coherence");
  analyze_cmd->add_option("--delta", query.delta, "Slack for (x, delta)-coherence");

  std::string drep = "none";
  std::string tiebreak = "intrinsic-best";
  std::string rule = "nearest";
  auto* elect_cmd = app.add_subcommand("elect", "Run an election with a dRep construction");
  elect_cmd->add_option("--profile", profile_path, "Profile JSON")->required();
  elect_cmd->add_option("--drep", drep, "Construction, kind[:key=value,...]");
  elect_cmd->add_option("--tiebreak", tiebreak,
                        "intrinsic-best | revealed-best | adversarial | lowest-index");
  elect_cmd->add_option("--rule", rule, "Delegation rule: nearest | first-listed");

  ForgeArgs forge_args;
  auto* forge_cmd = app.add_subcommand("forge", "Generate a fixture profile");
  forge_cmd
      ->add_option("name", forge_args.name,
                   "attraction-gap | adversarial-tie | omega-n | copy-refined | 16-lower | "
                   "2eps-revealed | 2eps-general | large-k | mav-reduce")
      ->required();
  forge_cmd->add_option("--n", forge_args.n, "Voters");
  forge_cmd->add_option("--m", forge_args.m, "Proposals");
  forge_cmd->add_option("--k", forge_args.k, "Reluctance");
  forge_cmd->add_option("--r", forge_args.r, "Copies per coherent set");
  forge_cmd->add_option("--c", forge_args.c, "Block width minus one");
  forge_cmd->add_option("--ballots", forge_args.ballots, "Comma-separated MAV ballots");
  forge_cmd->add_option("-o,--output", output_path, "Output file (stdout when omitted)");

  std::size_t lambda = 1;
  std::uint64_t budget = OracleOptions{}.budget;
  bool exact_size = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive best dRep set");
  oracle_cmd->add_option("--profile", profile_path, "Profile JSON")->required();
  oracle_cmd->add_option("--lambda", lambda, "Maximum number of dReps");
  oracle_cmd->add_option("--tiebreak", tiebreak, "Tie-break policy");
  oracle_cmd->add_option("--rule", rule, "Delegation rule");
  oracle_cmd->add_option("--budget", budget, "Largest search space allowed");
  oracle_cmd->add_flag("--exact-size", exact_size, "Only sets of exactly lambda dReps");
  oracle_cmd->add_option("-o,--output", output_path, "Write the certificate JSON here");

  std::string ratings, genome, movies, config_path;
  std::optional<std::size_t> lambda_max, reps, workers;
  bool shuffle = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep over a ratings dataset");
  sweep_cmd->add_option("--ratings", ratings, "ratings.csv");
  sweep_cmd->add_option("--genome", genome, "genome-scores.csv");
  sweep_cmd->add_option("--movies", movies, "movies.csv");
  sweep_cmd->add_option("--config", config_path, "Sweep config JSON");
  sweep_cmd->add_option("--lambda-max", lambda_max, "Largest number of dReps");
  sweep_cmd->add_option("--reps", reps, "Repetitions per cell");
  sweep_cmd->add_option("--workers", workers, "Worker threads (0 = all cores)");
  sweep_cmd->add_flag("--shuffle-proposals", shuffle, "Shuffle the greedy scan order per rep");
  sweep_cmd->add_option("-o,--output", output_path, "CSV output (stdout when omitted)");

  for (auto* sub : {validate, analyze_cmd, elect_cmd, forge_cmd, oracle_cmd, sweep_cmd}) {
    sub->add_option("--seed", seed, "Random seed");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      const auto profile = read_profile(profile_path);
      out << "ok: " << profile.n() << " voters, " << profile.m << " proposals\n";
    } else if (analyze_cmd->parsed()) {
      const auto profile = read_profile(profile_path);
      out << report_to_json(profile, analyze(profile, query));
    } else if (elect_cmd->parsed()) {
      return elect(read_profile(profile_path), drep, tiebreak, rule, out);
    } else if (forge_cmd->parsed()) {
      emit(serialize_profile(forge(forge_args)), output_path, out);
    } else if (oracle_cmd->parsed()) {
      const auto profile = read_profile(profile_path);
      OracleOptions options;
      options.budget = budget;
      options.exact_size = exact_size;
      const auto cert = brute_force_best(profile, lambda, parse_tiebreak(tiebreak),
                                         parse_delegation_rule(rule), options);
      out << "best ratio: " << cert.best_ratio.to_string() << '\n';
      out << "best winner score: " << cert.best_winner_score << '\n';
      out << "opt: " << cert.opt << '\n';
      out << "winner: " << proposal_name(cert.winner) << " (index " << cert.winner << ")\n";
      out << "witness:";
      for (const auto& d : cert.witness) out << ' ' << d.to_string();
      out << "\nsearched: " << cert.search_space << '\n';
      if (!output_path.empty()) emit(certificate_to_json(cert), output_path, out);
    } else if (sweep_cmd->parsed()) {
      auto config = config_path.empty() ? bench::SweepConfig{}
                                        : bench::read_sweep_config(config_path);
      if (seed) config.seed = *seed;
      if (lambda_max) config.lambda_max = *lambda_max;
      if (reps) config.repetitions = *reps;
      if (workers) config.workers = *workers;
      if (shuffle) config.shuffle_proposals = true;
      const auto data = bench::ingest(data_file(ratings, "ratings.csv"),
                                      data_file(genome, "genome-scores.csv"),
                                      data_file(movies, "movies.csv"));
      std::ostringstream csv;
      bench::write_sweep_csv(csv, bench::run_sweep(data, config));
      emit(csv.str(), output_path, out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}

}  // namespace proxyvote
