#include "hunters/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "hunters/error.hpp"

namespace hunters {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges,
             std::vector<std::string> labels)
    : adjacency_(vertex_count), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count)
    throw ValidationError("label count " + std::to_string(labels_.size()) +
                          " does not match vertex count " + std::to_string(vertex_count));
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw ValidationError("edge " + edge_text(u, v) + " out of range");
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& row = adjacency_[v];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) throw ValidationError("duplicate edge " + edge_text(std::min(v, *dup), std::max(v, *dup)));
  }
  edge_count_ = edges.size();
  if (std::all_of(labels_.begin(), labels_.end(), [](const auto& s) { return s.empty(); }))
    labels_.clear();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (auto v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out;
  out.reserve(vertex_count());
  for (const auto& row : adjacency_) out.push_back(row.size());
  return out;
}

const std::string& Graph::label(Vertex v) const {
  static const std::string none;
  if (labels_.empty()) {
    if (v >= vertex_count()) throw InvalidParameter("vertex out of range");
    return none;
  }
  return labels_.at(v);
}

VertexSet neighborhood(const Graph& g, const VertexSet& s, NeighborhoodMode mode) {
  VertexSet out;
  for (auto v : s) {
    if (v >= g.vertex_count()) throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
    for (auto w : g.neighbors(v)) out.insert(w);
  }
  if (mode == NeighborhoodMode::closed) out |= s;
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<int> colour(n, -1);
  Bipartition parts;
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop();
      for (auto w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? parts.even : parts.odd).insert(v);
  return parts;
}

std::size_t degeneracy(const Graph& g) {
  const auto n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<std::size_t> degree = g.degree_sequence();
  std::vector<bool> removed(n, false);
  std::size_t best = 0;
  // Bucket queue keyed on current degree.
  std::size_t max_degree = *std::max_element(degree.begin(), degree.end());
  std::vector<std::vector<Vertex>> buckets(max_degree + 1);
  for (Vertex v = 0; v < n; ++v) buckets[degree[v]].push_back(v);
  std::size_t cursor = 0;
  for (std::size_t done = 0; done < n;) {
    cursor = std::min(cursor, max_degree);
    while (buckets[cursor].empty()) ++cursor;
    auto v = buckets[cursor].back();
    buckets[cursor].pop_back();
    if (removed[v] || degree[v] != cursor) continue;
    removed[v] = true;
    ++done;
    best = std::max(best, cursor);
    for (auto w : g.neighbors(v)) {
      if (removed[w]) continue;
      --degree[w];
      buckets[degree[w]].push_back(w);
    }
    if (cursor > 0) --cursor;
  }
  return best;
}

std::vector<VertexSet> components(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (auto w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.original = keep.members();
  std::vector<Vertex> local(g.vertex_count(), static_cast<Vertex>(-1));
  for (Vertex i = 0; i < out.original.size(); ++i) {
    if (out.original[i] >= g.vertex_count()) throw InvalidParameter("vertex out of range");
    local[out.original[i]] = i;
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex i = 0; i < out.original.size(); ++i) {
    auto v = out.original[i];
    if (g.has_labels()) labels.push_back(g.label(v));
    for (auto w : g.neighbors(v))
      if (keep.contains(w) && v < w) edges.emplace_back(i, local[w]);
  }
  out.graph = Graph(out.original.size(), edges, std::move(labels));
  return out;
}

std::size_t homomorphism_bound(const Graph& g, const Graph& target,
                               std::span<const Vertex> phi, std::size_t hun_target) {
  if (phi.size() != g.vertex_count())
    throw InvalidParameter("vertex map has " + std::to_string(phi.size()) + " entries for " +
                           std::to_string(g.vertex_count()) + " vertices");
  std::vector<std::size_t> fibre(target.vertex_count(), 0);
  for (auto image : phi) {
    if (image >= target.vertex_count())
      throw ValidationError("vertex map sends a vertex outside the target graph");
    ++fibre[image];
  }
  for (auto [u, v] : g.edges())
    if (!target.adjacent(phi[u], phi[v]))
      throw ValidationError("edge " + edge_text(u, v) + " maps to non-edge " +
                            edge_text(phi[u], phi[v]));
  std::size_t k = fibre.empty() ? 0 : *std::max_element(fibre.begin(), fibre.end());
  return k * hun_target;
}

}  // namespace hunters
