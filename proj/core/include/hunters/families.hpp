#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "hunters/graph.hpp"

namespace hunters {

// Largest hypercube dimension the graph constructor will materialise.
inline constexpr unsigned max_hypercube_dimension = 20;

Graph build_path(std::size_t n);
Graph build_cycle(std::size_t n);

/// m x n grid; cell (x, y) with 0 <= x < m, 0 <= y < n is vertex x*n + y
/// and carries the label "x,y".
Graph build_grid(std::size_t m, std::size_t n);

/// Q^n. Vertex i is the subset of {1..n} whose characteristic vector is the
/// binary expansion of i (bit j <=> element j+1). Labels are n-character bit
/// strings with character j giving bit j.
Graph build_hypercube(unsigned n);

/// K_{1,n} with centre 0.
Graph build_star(std::size_t n);

Graph disjoint_union(const Graph& a, const Graph& b);

std::string hypercube_label(std::uint64_t vertex, unsigned n);

/// Dimension n when g is exactly build_hypercube(n), labels included.
std::optional<unsigned> recognize_hypercube(const Graph& g);

/// (m, n) when g is exactly build_grid(m, n), labels included.
std::optional<std::pair<std::size_t, std::size_t>> recognize_grid(const Graph& g);

}  // namespace hunters
