#include "proxyvote/construction_spec.hpp"

#include <array>
#include <charconv>
#include <numeric>
#include <utility>

#include "proxyvote/drep_lab.hpp"
#include "proxyvote/errors.hpp"
#include "proxyvote/oracle.hpp"

namespace proxyvote {

namespace {

constexpr std::array<std::pair<ConstructionKind, std::string_view>, 10> kNames{{
    {ConstructionKind::None, "none"},
    {ConstructionKind::DRep0, "drep0"},
    {ConstructionKind::AllOnes, "all-ones"},
    {ConstructionKind::AllZeros, "all-zeros"},
    {ConstructionKind::MajorityPair, "majority-pair"},
    {ConstructionKind::CoherentFamily, "coherent-family"},
    {ConstructionKind::MultiGroupFamily, "multi-group"},
    {ConstructionKind::MirrorAll, "mirror-all"},
    {ConstructionKind::Greedy, "greedy"},
    {ConstructionKind::BruteForce, "brute-force"},
}};

std::size_t parse_count(std::string_view key, std::string_view value) {
  std::size_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty()) {
    throw ModelError("bad value '" + std::string(value) + "' for '" + std::string(key) + "'");
  }
  return out;
}

}  // namespace

std::string to_string(ConstructionKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return std::string(name);
  }
  return "?";
}

ConstructionSpec parse_construction(std::string_view text) {
  ConstructionSpec spec;
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  bool known = false;
  for (const auto& [k, n] : kNames) {
    if (n == name) {
      spec.kind = k;
      known = true;
    }
  }
  if (!known) throw ModelError("unknown dRep construction '" + std::string(name) + "'");

  bool has_k = false;
  std::string_view rest = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? "" : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ModelError("expected key=value in '" + std::string(item) + "'");
    }
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    const auto kind = spec.kind;
    if (key == "core" && kind == ConstructionKind::CoherentFamily) {
      std::string_view list = value;
      while (!list.empty()) {
        const auto plus = list.find('+');
        spec.core.push_back(parse_count(key, list.substr(0, plus)));
        list = plus == std::string_view::npos ? "" : list.substr(plus + 1);
      }
    } else if (key == "k" && (kind == ConstructionKind::CoherentFamily ||
                              kind == ConstructionKind::MultiGroupFamily)) {
      spec.k = parse_count(key, value);
      has_k = true;
    } else if (key == "zeta" && kind == ConstructionKind::MultiGroupFamily) {
      spec.zeta = parse_count(key, value);
    } else if (key == "lambda" &&
               (kind == ConstructionKind::Greedy || kind == ConstructionKind::BruteForce)) {
      spec.lambda = parse_count(key, value);
    } else {
      throw ModelError("parameter '" + std::string(key) + "' does not apply to " +
                       std::string(name));
    }
  }
  if (spec.kind == ConstructionKind::CoherentFamily && !spec.core.empty() && has_k &&
      spec.core.size() != spec.k) {
    throw ModelError("coherent-family: |core| must equal k");
  }
  if (spec.kind == ConstructionKind::CoherentFamily && !spec.core.empty()) spec.k = spec.core.size();
  return spec;
}

std::vector<DRepType> build_dreps(const Profile& profile, const ConstructionSpec& spec,
                                  DelegationRule rule, TieBreak tiebreak) {
  switch (spec.kind) {
    case ConstructionKind::None: return {};
    case ConstructionKind::DRep0: return {drep0(profile)};
    case ConstructionKind::AllOnes: return {all_ones(profile.m)};
    case ConstructionKind::AllZeros: return {all_zeros(profile.m)};
    case ConstructionKind::MajorityPair: {
      auto pair = majority_pair(profile);
      return {pair[0], pair[1]};
    }
    case ConstructionKind::CoherentFamily: {
      if (!spec.core.empty()) return coherent_family(profile, spec.core);
      VoterSet everyone(profile.voters.size());
      std::iota(everyone.begin(), everyone.end(), std::size_t{0});
      return coherent_family(profile, pick_core_subset(profile, everyone, spec.k));
    }
    case ConstructionKind::MultiGroupFamily:
      return multi_group_family(profile, spec.k, spec.zeta, rule).dreps;
    case ConstructionKind::MirrorAll: return mirror_all(profile);
    case ConstructionKind::Greedy: return greedy(profile, spec.lambda);
    case ConstructionKind::BruteForce:
      return brute_force_best(profile, spec.lambda, tiebreak, rule).witness;
  }
  return {};
}

}  // namespace proxyvote
