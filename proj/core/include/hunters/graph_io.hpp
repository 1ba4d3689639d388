#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hunters/graph.hpp"

namespace hunters {

// Text format:
//   n m
//   u v        (m lines, 0 <= u < v < n)
//   label i t  (optional, after the edges; t is the rest of the line)
// Lines starting with '#' and blank lines are ignored.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

/// Whole file contents; throws Error when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace hunters
