#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hunters/dynamics.hpp"
#include "hunters/graph.hpp"
#include "hunters/orders.hpp"
#include "hunters/solver.hpp"

namespace hunters {

struct NestingViolation {
  Part side = Part::even;
  std::size_t k = 0;
  std::string reason;
};

/// Result of checking an order against brute-force mun profiles. For the
/// bipartite kind `profile_even`/`profile_odd` hold mun over each part; for
/// the full kind `profile_all` holds the closed profile mun[1..n].
struct NestingReport {
  OrderKind kind = OrderKind::bipartite;
  std::vector<NestingViolation> violations;
  std::vector<std::size_t> profile_even;
  std::vector<std::size_t> profile_odd;
  std::vector<std::size_t> profile_all;

  bool passed() const noexcept { return violations.empty(); }
};

/// For every k on both parts: N(first k of one part) must be an initial
/// segment of the other part and have size mun_part(k).
NestingReport check_isoperimetric_nesting(const Graph& g, const NestOrder& order,
                                          std::uint64_t budget = default_budget);

/// For every i: |N[G_i]| = mun[i] and N[G_i] = G_{|N[G_i]|}, where G_i is
/// the first i vertices of the full order.
NestingReport check_closed_nesting(const Graph& g, const NestOrder& order,
                                   std::uint64_t budget = default_budget);

/// Starting from one whole part (bipartite kind; the part whose order has
/// the smaller max_k |N(first k)| - k, ties to even) or from V (full kind),
/// repeatedly shoot the last m vertices of the first max(|R|, m) in the
/// current part's order. Throws InvalidOrder if a rabbit set stops being an
/// initial segment and NonTerminating after 4|V| steps.
Strategy nest_strategy(const Graph& g, const NestOrder& order, std::size_t m, Variant variant);

/// min(u^E, u^O) + 1 for a verified bipartite nesting with |u^E - u^O| <= 1,
/// or max_k (mun[k] - k) + 1 for a verified closed nesting. Throws
/// InvalidOrder when the check fails and Inapplicable when the u-values are
/// too far apart.
std::size_t hun_via_nesting(const Graph& g, const NestOrder& order,
                            std::uint64_t budget = default_budget);

}  // namespace hunters
