#include "proxyvote/profile_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "proxyvote/errors.hpp"

namespace proxyvote {

using ordered_json = nlohmann::ordered_json;

std::string serialize_profile(const Profile& profile) {
  ordered_json doc;
  doc["m"] = profile.m;
  doc["voters"] = ordered_json::array();
  for (const auto& v : profile.voters) {
    ordered_json voter;
    voter["id"] = v.id;
    voter["weight"] = v.weight;
    voter["k"] = v.k;
    voter["intrinsic"] = v.intrinsic_string();
    voter["revealed"] = v.revealed_string();
    doc["voters"].push_back(std::move(voter));
  }
  return doc.dump(2) + "\n";
}

Profile parse_profile(const std::string& json_text) {
  try {
    const auto doc = ordered_json::parse(json_text);
    Profile profile;
    profile.m = doc.at("m").get<std::size_t>();
    for (const auto& entry : doc.at("voters")) {
      const auto weight = entry.contains("weight") ? entry.at("weight").get<std::int64_t>() : 1;
      const auto k = entry.contains("k") ? entry.at("k").get<std::size_t>() : 0;
      profile.voters.push_back(Voter::from_strings(entry.at("id").get<std::int64_t>(),
                                                   entry.at("intrinsic").get<std::string>(),
                                                   entry.at("revealed").get<std::string>(), k,
                                                   weight));
    }
    profile.validate();
    return profile;
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("profile JSON: ") + e.what());
  }
}

Profile read_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open profile '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_profile(buffer.str());
}

void write_profile(const Profile& profile, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot write profile '" + path.string() + "'");
  out << serialize_profile(profile);
}

}  // namespace proxyvote
