#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hunters/orders.hpp"

namespace hunters {

// Text format: "kind bipartite" followed by the even order line and the odd
// order line, or "kind full" followed by one line. Each order line lists
// vertex indices separated by single spaces.
NestOrder parse_order(std::string_view text);
std::string format_order(const NestOrder& order);

NestOrder read_order_file(const std::filesystem::path& path);
void write_order_file(const std::filesystem::path& path, const NestOrder& order);

}  // namespace hunters
