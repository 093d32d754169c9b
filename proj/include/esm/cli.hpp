#pragma once

// The esm command line: subcommands certify, enumerate, sq1, imj, theta,
// marks and telescope.
//
// Exit status: 0 success or certified, 1 a negative mathematical verdict,
// 2 bad input (including usage errors), 3 an internal consistency failure.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "esm/certify.hpp"

namespace esm {

inline constexpr const char* kSchemaVersion = "1";

// Keys sorted, every integer a decimal string.
nlohmann::json certificate_json(const Certificate& c, const std::vector<std::string>& notes = {});
std::string certificate_text(const Certificate& c, const std::vector<std::string>& notes = {});

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace esm
