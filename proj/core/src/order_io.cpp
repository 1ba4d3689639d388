#include "hunters/order_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "hunters/error.hpp"
#include "hunters/graph_io.hpp"

namespace hunters {

namespace {

std::vector<Vertex> parse_sequence(std::string_view line, std::size_t number) {
  std::vector<Vertex> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ') {
      ++pos;
      continue;
    }
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
    auto consumed = static_cast<std::size_t>(ptr - line.data());
    if (ec != std::errc{} || (consumed < line.size() && line[consumed] != ' '))
      throw ParseError(number, "expected vertex indices separated by spaces");
    out.push_back(v);
    pos = consumed;
  }
  return out;
}

void write_sequence(std::ostringstream& out, const std::vector<Vertex>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? " " : "") << seq[i];
  out << '\n';
}

}  // namespace

NestOrder parse_order(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto end = text.find('\n');
    lines.push_back(text.substr(0, end));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  for (auto& line : lines)
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (lines.empty()) throw ParseError(1, "missing 'kind' header");

  NestOrder order;
  std::size_t expected = 0;
  if (lines[0] == "kind bipartite") {
    order.kind = OrderKind::bipartite;
    expected = 2;
  } else if (lines[0] == "kind full") {
    order.kind = OrderKind::full;
    expected = 1;
  } else {
    throw ParseError(1, "header must be 'kind bipartite' or 'kind full'");
  }
  if (lines.size() != expected + 1)
    throw ParseError(lines.size(), "expected " + std::to_string(expected) + " order line(s) after the header");
  if (order.kind == OrderKind::full) {
    order.all = parse_sequence(lines[1], 2);
  } else {
    order.even = parse_sequence(lines[1], 2);
    order.odd = parse_sequence(lines[2], 3);
  }
  return order;
}

std::string format_order(const NestOrder& order) {
  std::ostringstream out;
  if (order.kind == OrderKind::full) {
    out << "kind full\n";
    write_sequence(out, order.all);
  } else {
    out << "kind bipartite\n";
    write_sequence(out, order.even);
    write_sequence(out, order.odd);
  }
  return out.str();
}

NestOrder read_order_file(const std::filesystem::path& path) { return parse_order(read_text_file(path)); }

void write_order_file(const std::filesystem::path& path, const NestOrder& order) {
  write_text_file(path, format_order(order));
}

}  // namespace hunters
