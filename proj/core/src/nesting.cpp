#include "hunters/nesting.hpp"

#include <algorithm>
#include <limits>

#include "hunters/error.hpp"

namespace hunters {

namespace {

const char* part_name(Part p) {
  switch (p) {
    case Part::even: return "even";
    case Part::odd: return "odd";
    case Part::all: return "all";
  }
  return "?";
}

bool is_initial_segment(const VertexSet& s, const std::vector<Vertex>& seq) {
  auto size = s.size();
  if (size > seq.size()) return false;
  for (std::size_t i = 0; i < size; ++i)
    if (!s.contains(seq[i])) return false;
  return true;
}

long long u_of(const std::vector<std::size_t>& profile) {
  if (profile.empty()) return 0;
  long long best = std::numeric_limits<long long>::min();
  for (std::size_t k = 1; k <= profile.size(); ++k)
    best = std::max(best, static_cast<long long>(profile[k - 1]) - static_cast<long long>(k));
  return best;
}

// max_k |N(first k)| - k along one part's order.
long long order_u(const Graph& g, const std::vector<Vertex>& seq, NeighborhoodMode mode) {
  if (seq.empty()) return std::numeric_limits<long long>::max();
  VertexSet covered;
  long long best = std::numeric_limits<long long>::min();
  for (std::size_t k = 0; k < seq.size(); ++k) {
    covered |= neighborhood(g, VertexSet{seq[k]}, mode);
    best = std::max(best, static_cast<long long>(covered.size()) - static_cast<long long>(k + 1));
  }
  return best;
}

std::vector<std::size_t> positions(const std::vector<Vertex>& seq, std::size_t n) {
  std::vector<std::size_t> pos(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = i;
  return pos;
}

}  // namespace

NestingReport check_isoperimetric_nesting(const Graph& g, const NestOrder& order, std::uint64_t budget) {
  if (order.kind != OrderKind::bipartite) throw InvalidParameter("isoperimetric nesting needs a bipartite order");
  validate_order(g, order);
  NestingReport report;
  report.kind = OrderKind::bipartite;
  report.profile_even = mun_profile_over(g, VertexSet::of(order.even), NeighborhoodMode::open, budget);
  report.profile_odd = mun_profile_over(g, VertexSet::of(order.odd), NeighborhoodMode::open, budget);

  for (auto side : {Part::even, Part::odd}) {
    const auto& own = side == Part::even ? order.even : order.odd;
    const auto& other = side == Part::even ? order.odd : order.even;
    const auto& profile = side == Part::even ? report.profile_even : report.profile_odd;
    VertexSet segment;
    for (std::size_t k = 1; k <= own.size(); ++k) {
      segment.insert(own[k - 1]);
      auto nbr = neighborhood(g, segment, NeighborhoodMode::open);
      if (!is_initial_segment(nbr, other))
        report.violations.push_back({side, k, "neighbourhood is not an initial segment of the " +
                                                  std::string(part_name(side == Part::even ? Part::odd : Part::even)) +
                                                  " order"});
      if (nbr.size() != profile[k - 1])
        report.violations.push_back({side, k, "neighbourhood size " + std::to_string(nbr.size()) +
                                                  " differs from minimum " + std::to_string(profile[k - 1])});
    }
  }
  return report;
}

NestingReport check_closed_nesting(const Graph& g, const NestOrder& order, std::uint64_t budget) {
  if (order.kind != OrderKind::full) throw InvalidParameter("closed nesting needs a full order");
  validate_order(g, order);
  NestingReport report;
  report.kind = OrderKind::full;
  report.profile_all = mun_profile_over(g, g.vertices(), NeighborhoodMode::closed, budget);
  VertexSet chain;
  for (std::size_t i = 1; i <= order.all.size(); ++i) {
    VertexSet next = chain;
    next.insert(order.all[i - 1]);
    if (next.size() != i || !chain.is_subset_of(next) || chain == next)
      report.violations.push_back({Part::all, i, "chain is not strictly increasing by one vertex"});
    chain = std::move(next);
    auto closed = neighborhood(g, chain, NeighborhoodMode::closed);
    if (closed.size() != report.profile_all[i - 1])
      report.violations.push_back({Part::all, i, "closed neighbourhood size " + std::to_string(closed.size()) +
                                                     " differs from minimum " +
                                                     std::to_string(report.profile_all[i - 1])});
    if (!is_initial_segment(closed, order.all))
      report.violations.push_back({Part::all, i, "closed neighbourhood is not an initial segment"});
  }
  return report;
}

Strategy nest_strategy(const Graph& g, const NestOrder& order, std::size_t m, Variant variant) {
  if (m == 0) throw InvalidParameter("hunter count must be positive");
  if ((variant == Variant::standard) != (order.kind == OrderKind::bipartite))
    throw InvalidParameter(variant == Variant::standard ? "standard variant needs a bipartite order"
                                                        : "deaf variant needs a full order");
  validate_order(g, order);
  const auto n = g.vertex_count();
  const auto mode = neighborhood_mode(variant);

  Part part = Part::all;
  if (order.kind == OrderKind::bipartite)
    part = order_u(g, order.even, mode) <= order_u(g, order.odd, mode) ? Part::even : Part::odd;

  std::vector<std::size_t> pos_first = positions(order.kind == OrderKind::full ? order.all : order.even, n);
  std::vector<std::size_t> pos_second =
      order.kind == OrderKind::full ? pos_first : positions(order.odd, n);

  Strategy strategy{{}, variant};
  VertexSet rabbits = VertexSet::of(order.sequence(part));
  const std::size_t limit = 4 * n;
  while (!rabbits.empty()) {
    if (strategy.shots.size() >= limit)
      throw NonTerminating(std::to_string(m) + " hunters do not clear the graph within " +
                           std::to_string(limit) + " steps");
    const auto& seq = order.sequence(part);
    const auto& pos = (part == Part::odd) ? pos_second : pos_first;
    const auto r = rabbits.size();
    for (auto v : rabbits)
      if (pos[v] >= r)
        throw InvalidOrder("rabbit set at step " + std::to_string(strategy.shots.size()) +
                           " is not an initial segment of the " + part_name(part) + " order");
    const auto top = std::min(std::max(r, m), seq.size());
    const auto bottom = top - std::min(m, top);
    VertexSet shot = VertexSet::of(std::span(seq).subspan(bottom, top - bottom));
    rabbits = step(g, rabbits, shot, variant);
    strategy.shots.push_back(std::move(shot));
    if (part != Part::all) part = part == Part::even ? Part::odd : Part::even;
  }
  return strategy;
}

std::size_t hun_via_nesting(const Graph& g, const NestOrder& order, std::uint64_t budget) {
  if (order.kind == OrderKind::full) {
    auto report = check_closed_nesting(g, order, budget);
    if (!report.passed())
      throw InvalidOrder("order is not a closed isoperimetric nesting (first violation at i = " +
                         std::to_string(report.violations.front().k) + ")");
    return static_cast<std::size_t>(u_of(report.profile_all) + 1);
  }
  auto report = check_isoperimetric_nesting(g, order, budget);
  if (!report.passed()) {
    const auto& first = report.violations.front();
    throw InvalidOrder(std::string("order is not an isoperimetric nesting (first violation: ") +
                       part_name(first.side) + " side, k = " + std::to_string(first.k) + ")");
  }
  auto u_even = u_of(report.profile_even);
  auto u_odd = u_of(report.profile_odd);
  if (u_even - u_odd > 1 || u_odd - u_even > 1)
    throw Inapplicable("u-values " + std::to_string(u_even) + " and " + std::to_string(u_odd) +
                           " differ by more than one",
                       u_even, u_odd);
  return static_cast<std::size_t>(std::max<long long>(1, std::min(u_even, u_odd) + 1));
}

}  // namespace hunters
