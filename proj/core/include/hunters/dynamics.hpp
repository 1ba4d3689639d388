#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "hunters/graph.hpp"
#include "hunters/vertex_set.hpp"

namespace hunters {

/// standard: the rabbit must move after every volley (R' = N(R \ H)).
/// deaf: the rabbit may also stay put (R' = N[R \ H]).
enum class Variant { standard, deaf };

constexpr NeighborhoodMode neighborhood_mode(Variant v) noexcept {
  return v == Variant::deaf ? NeighborhoodMode::closed : NeighborhoodMode::open;
}

/// Shot sets H_1..H_m. Multisets collapse to sets: the dynamics depend only
/// on which vertices are hit.
struct Strategy {
  std::vector<VertexSet> shots;
  Variant variant = Variant::standard;

  std::size_t length() const noexcept { return shots.size(); }
  std::size_t max_shot_size() const noexcept;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// sets[0] is the initial rabbit set; sets[i] follows shot i (1-based).
struct Trace {
  std::vector<VertexSet> sets;
  std::optional<std::size_t> caught_at;
};

/// v_0 .. v_k with v_i in sets[i], v_i not shot at step i+1, and consecutive
/// vertices adjacent (or equal, for the deaf variant).
struct EscapeWitness {
  std::vector<Vertex> walk;
};

enum class StartSide { any, even, odd };

struct Caught {
  std::size_t step;
};

struct Escaped {
  EscapeWitness witness;
};

using Verdict = std::variant<Caught, Escaped>;

VertexSet step(const Graph& g, const VertexSet& rabbits, const VertexSet& shot, Variant variant);

/// Iterates step from `start`, stopping at the first empty set.
/// Throws InvalidStrategy when a shot names a vertex outside the graph.
Trace run(const Graph& g, const Strategy& strategy, VertexSet start);

/// Throws InvalidParameter for an even/odd start on a non-bipartite graph.
Verdict verify(const Graph& g, const Strategy& strategy, StartSide start = StartSide::any);

/// Back-chains a rabbit walk through a trace that ends non-empty, taking the
/// lowest-index vertex of the final set and lowest-index predecessors.
EscapeWitness escape_witness(const Graph& g, const Strategy& strategy, const Trace& trace);

/// Throws InvalidParameter when the variants differ.
Strategy concatenate(const Strategy& first, const Strategy& second);

/// s.s for odd length, s.(empty).s for even length. The input must respect
/// parity on g: every shot lies inside one part and consecutive non-idle
/// steps alternate parts. Throws InvalidParameter naming the offending step.
Strategy extend_parity(const Graph& g, const Strategy& s);

}  // namespace hunters
