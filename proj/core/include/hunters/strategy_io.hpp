#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hunters/dynamics.hpp"

namespace hunters {

// Text format: a header line "variant: standard" or "variant: deaf", then
// one line per step holding the shot's vertex indices in ascending order,
// separated by single spaces. An empty line is an empty shot.
Strategy parse_strategy(std::string_view text);
std::string format_strategy(const Strategy& s);

Strategy read_strategy_file(const std::filesystem::path& path);
void write_strategy_file(const std::filesystem::path& path, const Strategy& s);

}  // namespace hunters
