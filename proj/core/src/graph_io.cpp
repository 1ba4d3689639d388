#include "hunters/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "hunters/error.hpp"

namespace hunters {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  auto header = tokens(lines[0].text);
  if (header.size() != 2) throw ParseError(lines[0].number, "header must be 'n m'");
  auto n = parse_count(header[0], lines[0].number);
  auto m = parse_count(header[1], lines[0].number);
  if (lines.size() < m + 1)
    throw ParseError(lines.back().number, "expected " + std::to_string(m) + " edge lines, found " +
                                              std::to_string(lines.size() - 1));

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t e = 0; e < m; ++e) {
    const auto& line = lines[e + 1];
    auto parts = tokens(line.text);
    if (parts.size() != 2) throw ParseError(line.number, "edge line must be 'u v'");
    auto u = parse_count(parts[0], line.number);
    auto v = parse_count(parts[1], line.number);
    if (u >= n || v >= n) throw ParseError(line.number, "vertex index out of range");
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    if (u > v) throw ParseError(line.number, "edge must be written with u < v");
    Edge edge{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(edge).second) throw ParseError(line.number, "duplicate edge");
    edges.push_back(edge);
  }

  std::vector<std::string> labels;
  for (std::size_t i = m + 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto parts = tokens(line.text);
    if (parts.size() < 3 || parts[0] != "label")
      throw ParseError(line.number, "expected 'label i text'");
    auto v = parse_count(parts[1], line.number);
    if (v >= n) throw ParseError(line.number, "label for vertex out of range");
    if (labels.empty()) labels.resize(n);
    if (!labels[v].empty()) throw ParseError(line.number, "duplicate label");
    auto offset = static_cast<std::size_t>(parts[2].data() - line.text.data());
    labels[v] = std::string(line.text.substr(offset));
  }
  return Graph(n, edges, std::move(labels));
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (g.has_labels())
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!g.label(v).empty()) out << "label " << v << ' ' << g.label(v) << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

Graph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  write_text_file(path, format_graph(g));
}

}  // namespace hunters
