#pragma once

#include <filesystem>
#include <string>

#include "proxyvote/profile.hpp"

namespace proxyvote {

// {"m": ..., "voters": [{"id", "weight", "k", "intrinsic": "0101", "revealed": "01-1"}]}
// Keys are emitted in that fixed order with two-space indentation and a
// trailing newline, so serialize(parse(s)) == s for any serialized profile.
std::string serialize_profile(const Profile& profile);
Profile parse_profile(const std::string& json_text);

Profile read_profile(const std::filesystem::path& path);
void write_profile(const Profile& profile, const std::filesystem::path& path);

}  // namespace proxyvote
