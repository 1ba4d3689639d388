#include "hunters/families.hpp"

#include <bit>
#include <charconv>
#include <string>
#include <vector>

#include "hunters/error.hpp"

namespace hunters {

Graph build_path(std::size_t n) {
  if (n == 0) throw InvalidParameter("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph build_cycle(std::size_t n) {
  if (n < 3) throw InvalidParameter("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, edges);
}

Graph build_grid(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidParameter("grid dimensions must be positive");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  auto id = [n](std::size_t x, std::size_t y) { return static_cast<Vertex>(x * n + y); };
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      labels.push_back(std::to_string(x) + "," + std::to_string(y));
      if (y + 1 < n) edges.emplace_back(id(x, y), id(x, y + 1));
      if (x + 1 < m) edges.emplace_back(id(x, y), id(x + 1, y));
    }
  return Graph(m * n, edges, std::move(labels));
}

std::string hypercube_label(std::uint64_t vertex, unsigned n) {
  std::string s(n, '0');
  for (unsigned j = 0; j < n; ++j)
    if ((vertex >> j) & 1U) s[j] = '1';
  return s;
}

Graph build_hypercube(unsigned n) {
  if (n > max_hypercube_dimension)
    throw CapacityError("hypercube dimension " + std::to_string(n) + " exceeds limit " +
                        std::to_string(max_hypercube_dimension));
  const std::size_t count = std::size_t{1} << n;
  std::vector<Edge> edges;
  edges.reserve(count * n / 2);
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t v = 0; v < count; ++v) {
    labels.push_back(hypercube_label(v, n));
    for (unsigned j = 0; j < n; ++j) {
      auto w = v ^ (std::size_t{1} << j);
      if (v < w) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
  }
  return Graph(count, edges, std::move(labels));
}

Graph build_star(std::size_t n) {
  if (n == 0) throw InvalidParameter("star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) edges.emplace_back(0, v);
  return Graph(n + 1, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto shift = static_cast<Vertex>(a.vertex_count());
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (Vertex v = 0; v < a.vertex_count(); ++v) labels.push_back(a.label(v));
    for (Vertex v = 0; v < b.vertex_count(); ++v) labels.push_back(b.label(v));
  }
  return Graph(a.vertex_count() + b.vertex_count(), edges, std::move(labels));
}

std::optional<unsigned> recognize_hypercube(const Graph& g) {
  auto count = g.vertex_count();
  if (count == 0 || !std::has_single_bit(count) || !g.has_labels()) return std::nullopt;
  auto n = static_cast<unsigned>(std::countr_zero(count));
  if (n > max_hypercube_dimension) return std::nullopt;
  for (Vertex v = 0; v < count; ++v)
    if (g.label(v) != hypercube_label(v, n)) return std::nullopt;
  if (g.edge_count() != count * n / 2) return std::nullopt;
  for (Vertex v = 0; v < count; ++v)
    for (auto w : g.neighbors(v))
      if (!std::has_single_bit(static_cast<std::size_t>(v ^ w))) return std::nullopt;
  return n;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> parse_cell(const std::string& label) {
  auto comma = label.find(',');
  if (comma == std::string::npos) return std::nullopt;
  std::size_t x = 0, y = 0;
  auto first = std::from_chars(label.data(), label.data() + comma, x);
  auto second = std::from_chars(label.data() + comma + 1, label.data() + label.size(), y);
  if (first.ec != std::errc{} || first.ptr != label.data() + comma) return std::nullopt;
  if (second.ec != std::errc{} || second.ptr != label.data() + label.size()) return std::nullopt;
  return std::pair{x, y};
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> recognize_grid(const Graph& g) {
  if (g.vertex_count() == 0 || !g.has_labels()) return std::nullopt;
  auto last = parse_cell(g.label(static_cast<Vertex>(g.vertex_count() - 1)));
  if (!last) return std::nullopt;
  auto m = last->first + 1, n = last->second + 1;
  if (m * n != g.vertex_count()) return std::nullopt;
  if (build_grid(m, n) != g) return std::nullopt;
  return std::pair{m, n};
}

}  // namespace hunters
