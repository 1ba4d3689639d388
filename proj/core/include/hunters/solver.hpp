#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hunters/dynamics.hpp"
#include "hunters/graph.hpp"

namespace hunters {

inline constexpr std::uint64_t default_budget = 10'000'000;

// Brute-force routines work on 64-bit vertex masks.
inline constexpr std::size_t max_brute_force_vertices = 64;

enum class Side { all, even, odd };

/// mun(1..K) (or mun[1..K] in closed mode) over k-subsets of one side.
struct MunProfile {
  Side side = Side::all;
  NeighborhoodMode mode = NeighborhoodMode::open;
  std::vector<std::size_t> values;  // values[k-1] = mun(k)

  /// a_k = mun(k) - mun(k-1), with mun(0) = 0.
  std::vector<long long> differences() const;
  /// max_k (mun(k) - k).
  long long u() const;
};

/// Vertices of `side`; throws InvalidParameter if the side needs a
/// bipartition and g has none.
VertexSet side_vertices(const Graph& g, Side side);

/// Exact minimum of |N(W)| (|N[W]| when closed) over W within the side,
/// |W| = k. Budget counts enumeration nodes.
std::size_t mun(const Graph& g, std::size_t k, Side side, NeighborhoodMode mode,
                std::uint64_t budget = default_budget);

/// Same as mun but over an arbitrary candidate set.
std::size_t mun_over(const Graph& g, std::size_t k, const VertexSet& candidates,
                     NeighborhoodMode mode, std::uint64_t budget = default_budget);

MunProfile mun_profile(const Graph& g, Side side, NeighborhoodMode mode,
                       std::uint64_t budget = default_budget);
std::vector<std::size_t> mun_profile_over(const Graph& g, const VertexSet& candidates,
                                          NeighborhoodMode mode,
                                          std::uint64_t budget = default_budget);

long long u_value(const Graph& g, Side side, NeighborhoodMode mode,
                  std::uint64_t budget = default_budget);

/// u(G) + 1 over the whole vertex set, never below 1.
std::size_t lower_bound_mun(const Graph& g, NeighborhoodMode mode,
                            std::uint64_t budget = default_budget);

/// Degeneracy, never below 1 on a non-empty graph.
std::size_t lower_bound_degeneracy(const Graph& g);

struct ClearResult {
  enum class Outcome { cleared, blocked, budget_exceeded };

  Outcome outcome = Outcome::blocked;
  std::optional<Strategy> witness;  // set when cleared; shortest possible
  std::uint64_t explored_states = 0;
  std::uint64_t evaluated_shots = 0;
};

/// Decides whether k hunters can empty the rabbit set, by breadth-first
/// search over rabbit-position sets starting from `start` (all vertices by
/// default). Shots have exactly min(k, |R|) vertices inside R. A state is
/// skipped when it contains an already-queued state. Budget counts evaluated
/// shots.
ClearResult can_clear(const Graph& g, std::size_t k, Variant variant,
                      std::uint64_t budget = default_budget,
                      std::optional<VertexSet> start = std::nullopt);

struct SolveResult {
  std::size_t hunter_number = 0;
  Strategy witness;
  std::uint64_t explored_states = 0;
  std::uint64_t evaluated_shots = 0;
  std::size_t lower_bound_used = 0;
};

/// Hunter number via can_clear per component, starting each component at
/// max(degeneracy bound, mun bound). The witness concatenates per-component
/// witnesses in component order. Throws BudgetExceeded carrying the best
/// lower bound reached.
SolveResult exact_hun(const Graph& g, Variant variant, std::uint64_t budget = default_budget);

struct ParitySolveResult {
  std::size_t hunter_number = 0;
  StartSide start = StartSide::even;
  Strategy strategy;  // parity-respecting, wins from `start`
};

/// Least k for which some single-part start can be cleared (standard
/// variant, connected bipartite g).
ParitySolveResult parity_hun(const Graph& g, std::uint64_t budget = default_budget);

}  // namespace hunters
