#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hunters/vertex_set.hpp"

namespace hunters {

using Edge = std::pair<Vertex, Vertex>;

enum class NeighborhoodMode { open, closed };

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency is stored as sorted neighbor
/// lists; self-loops and parallel edges are rejected at construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  Graph(std::size_t vertex_count, std::span<const Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  VertexSet adjacency_set(Vertex v) const { return VertexSet::of(adjacency_.at(v)); }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Empty when the vertex carries no label.
  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  VertexSet vertices() const { return VertexSet::range(vertex_count()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

VertexSet neighborhood(const Graph& g, const VertexSet& s, NeighborhoodMode mode);

struct Bipartition {
  VertexSet even;
  VertexSet odd;
};

/// Two-colouring by breadth-first search from the lowest vertex of each
/// component (roots are even); nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

std::size_t degeneracy(const Graph& g);

/// Connected components ordered by their lowest vertex.
std::vector<VertexSet> components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // local index -> vertex of the parent graph
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Upper bound k * hun_target for a homomorphism phi: g -> target, where k
/// is the largest fibre. Throws ValidationError naming an edge that does not
/// map to an edge.
std::size_t homomorphism_bound(const Graph& g, const Graph& target,
                               std::span<const Vertex> phi, std::size_t hun_target);

}  // namespace hunters
