#include "hunters/strategy_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "hunters/error.hpp"
#include "hunters/graph_io.hpp"

namespace hunters {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto end = text.find('\n');
    if (end == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, end));
    text.remove_prefix(end + 1);
  }
  for (auto& line : lines)
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return lines;
}

}  // namespace

Strategy parse_strategy(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'variant:' header");
  Strategy s;
  if (lines[0] == "variant: standard")
    s.variant = Variant::standard;
  else if (lines[0] == "variant: deaf")
    s.variant = Variant::deaf;
  else
    throw ParseError(1, "header must be 'variant: standard' or 'variant: deaf'");

  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto line = lines[i];
    VertexSet shot;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (line[pos] == ' ' || line[pos] == '\t') {
        ++pos;
        continue;
      }
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
      auto consumed = static_cast<std::size_t>(ptr - line.data());
      if (ec != std::errc{} || (consumed < line.size() && line[consumed] != ' ' && line[consumed] != '\t'))
        throw ParseError(i + 1, "expected vertex indices separated by spaces");
      if (shot.contains(v)) throw ParseError(i + 1, "vertex " + std::to_string(v) + " repeated");
      shot.insert(v);
      pos = consumed;
    }
    s.shots.push_back(std::move(shot));
  }
  return s;
}

std::string format_strategy(const Strategy& s) {
  std::ostringstream out;
  out << "variant: " << (s.variant == Variant::deaf ? "deaf" : "standard") << '\n';
  for (const auto& shot : s.shots) {
    bool first = true;
    for (auto v : shot) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Strategy read_strategy_file(const std::filesystem::path& path) {
  return parse_strategy(read_text_file(path));
}

void write_strategy_file(const std::filesystem::path& path, const Strategy& s) {
  write_text_file(path, format_strategy(s));
}

}  // namespace hunters
