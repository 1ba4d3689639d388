#include "hunters/dynamics.hpp"

#include <algorithm>
#include <string>

#include "hunters/error.hpp"

namespace hunters {

std::size_t Strategy::max_shot_size() const noexcept {
  std::size_t best = 0;
  for (const auto& h : shots) best = std::max(best, h.size());
  return best;
}

VertexSet step(const Graph& g, const VertexSet& rabbits, const VertexSet& shot, Variant variant) {
  return neighborhood(g, rabbits - shot, neighborhood_mode(variant));
}

Trace run(const Graph& g, const Strategy& strategy, VertexSet start) {
  for (std::size_t i = 0; i < strategy.shots.size(); ++i) {
    auto top = strategy.shots[i].max();
    if (top && *top >= g.vertex_count())
      throw InvalidStrategy("step " + std::to_string(i + 1) + " shoots vertex " +
                            std::to_string(*top) + " outside the graph");
  }
  Trace trace;
  trace.sets.push_back(std::move(start));
  if (trace.sets.back().empty()) {
    trace.caught_at = 0;
    return trace;
  }
  for (std::size_t i = 0; i < strategy.shots.size(); ++i) {
    trace.sets.push_back(step(g, trace.sets.back(), strategy.shots[i], strategy.variant));
    if (trace.sets.back().empty()) {
      trace.caught_at = i + 1;
      break;
    }
  }
  return trace;
}

EscapeWitness escape_witness(const Graph& g, const Strategy& strategy, const Trace& trace) {
  EscapeWitness witness;
  if (trace.sets.empty() || trace.sets.back().empty()) return witness;
  const bool deaf = strategy.variant == Variant::deaf;
  auto last = trace.sets.size() - 1;
  std::vector<Vertex> reversed{*trace.sets[last].min()};
  for (auto t = last; t > 0; --t) {
    auto current = reversed.back();
    // Candidates at time t-1 survived shot t and can reach `current`.
    auto alive = trace.sets[t - 1] - strategy.shots[t - 1];
    std::optional<Vertex> pick;
    if (deaf && alive.contains(current)) pick = current;
    for (auto w : g.neighbors(current))
      if (alive.contains(w) && (!pick || w < *pick)) {
        pick = w;
        break;
      }
    if (!pick) throw Error("trace is inconsistent with the strategy");
    reversed.push_back(*pick);
  }
  witness.walk.assign(reversed.rbegin(), reversed.rend());
  return witness;
}

Verdict verify(const Graph& g, const Strategy& strategy, StartSide start) {
  VertexSet initial = g.vertices();
  if (start != StartSide::any) {
    auto parts = bipartition(g);
    if (!parts) throw InvalidParameter("even/odd start requires a bipartite graph");
    initial = start == StartSide::even ? parts->even : parts->odd;
  }
  auto trace = run(g, strategy, std::move(initial));
  if (trace.caught_at) return Caught{*trace.caught_at};
  return Escaped{escape_witness(g, strategy, trace)};
}

Strategy concatenate(const Strategy& first, const Strategy& second) {
  if (first.variant != second.variant)
    throw InvalidParameter("cannot concatenate strategies of different variants");
  Strategy out = first;
  out.shots.insert(out.shots.end(), second.shots.begin(), second.shots.end());
  return out;
}

Strategy extend_parity(const Graph& g, const Strategy& s) {
  if (s.variant != Variant::standard)
    throw InvalidParameter("parity extension applies to the standard variant only");
  auto parts = bipartition(g);
  if (!parts) throw InvalidParameter("parity extension requires a bipartite graph");
  // Part shot at step 1 (0 = even, 1 = odd), fixed by the first non-empty shot.
  std::optional<int> first_part;
  for (std::size_t i = 0; i < s.shots.size(); ++i) {
    const auto& h = s.shots[i];
    if (h.empty()) continue;
    int part;
    if (h.is_subset_of(parts->even))
      part = 0;
    else if (h.is_subset_of(parts->odd))
      part = 1;
    else
      throw InvalidParameter("step " + std::to_string(i + 1) + " shoots both parts");
    int expected_first = (part + static_cast<int>(i % 2)) % 2;
    if (!first_part)
      first_part = expected_first;
    else if (*first_part != expected_first)
      throw InvalidParameter("step " + std::to_string(i + 1) + " breaks parity alternation");
  }
  Strategy middle{{}, s.variant};
  if (s.shots.size() % 2 == 0) middle.shots.emplace_back();
  return concatenate(concatenate(s, middle), s);
}

}  // namespace hunters
