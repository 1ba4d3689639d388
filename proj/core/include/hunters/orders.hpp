#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hunters/graph.hpp"
#include "hunters/vertex_set.hpp"

namespace hunters {

/// Subset of {1..n} as a bitmask, bit j <=> element j+1 (the same encoding
/// as hypercube vertex indices).
using Subset = std::uint64_t;

// Largest ground set for which a whole weightlex sequence is materialised.
inline constexpr unsigned max_weightlex_ground = 26;

/// x precedes y iff the least element of x ^ y belongs to x.
std::strong_ordering lex_compare(Subset x, Subset y) noexcept;

/// Smaller sets first, then lex_compare.
std::strong_ordering weightlex_compare(Subset x, Subset y) noexcept;

struct GridPoint {
  long x = 0;
  long y = 0;
};

/// Earlier anti-diagonal first; within an anti-diagonal, smaller x first.
std::strong_ordering grid_compare(GridPoint p, GridPoint q) noexcept;

/// Calls visit(s) for every subset of {1..n} in weightlex order.
template <class Visit>
void for_each_weightlex(unsigned n, Visit&& visit) {
  for (unsigned w = 0; w <= n; ++w) {
    // w-element combinations of bit positions, lexicographically.
    std::vector<unsigned> idx(w);
    for (unsigned i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      Subset s = 0;
      for (auto i : idx) s |= Subset{1} << i;
      visit(s);
      unsigned pos = w;
      while (pos > 0 && idx[pos - 1] == n - w + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (auto j = pos; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

/// All 2^n subsets of {1..n} in weightlex order.
std::vector<Subset> weightlex_sequence(unsigned n);

/// 1-based rank of x among all subsets of {1..n} in weightlex order.
std::uint64_t weightlex_position(Subset x, unsigned n);

enum class OrderKind { bipartite, full };
enum class Part { even, odd, all };

/// Total orders driving the nest strategy: one per bipartition part
/// (bipartite kind, standard rabbit) or one over every vertex (full kind,
/// deaf rabbit).
struct NestOrder {
  OrderKind kind = OrderKind::bipartite;
  std::vector<Vertex> even;
  std::vector<Vertex> odd;
  std::vector<Vertex> all;

  /// Throws InvalidParameter if the part does not exist for this kind.
  const std::vector<Vertex>& sequence(Part part) const;

  friend bool operator==(const NestOrder&, const NestOrder&) = default;
};

/// The first k vertices of a part's order; throws InvalidParameter when k
/// exceeds the part.
VertexSet initial_segment(const NestOrder& order, Part part, std::size_t k);

/// Checks that the order is a bijection onto g's vertices and, for the
/// bipartite kind, that each part is an independent set. Throws InvalidOrder.
void validate_order(const Graph& g, const NestOrder& order);

/// Weightlex-even / weightlex-odd on Q^n.
NestOrder weightlex_nest_order(unsigned n);
/// Weightlex over every vertex of Q^n.
NestOrder weightlex_full_order(unsigned n);

/// Grid order for build_grid(m, n). Cell (r, c) is ranked as the point
/// whose x runs along the longer side of the grid.
NestOrder grid_nest_order(std::size_t m, std::size_t n);
NestOrder grid_full_order(std::size_t m, std::size_t n);

/// Order on a bipartite graph whose parts follow vertex index.
NestOrder index_nest_order(const Graph& g);

}  // namespace hunters
