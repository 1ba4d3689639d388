#include "hunters/orders.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hunters/error.hpp"

namespace hunters {

std::strong_ordering lex_compare(Subset x, Subset y) noexcept {
  if (x == y) return std::strong_ordering::equal;
  Subset lowest = (x ^ y) & -(x ^ y);
  return (x & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering weightlex_compare(Subset x, Subset y) noexcept {
  if (auto c = std::popcount(x) <=> std::popcount(y); c != 0) return c;
  return lex_compare(x, y);
}

std::strong_ordering grid_compare(GridPoint p, GridPoint q) noexcept {
  if (auto c = (p.x + p.y) <=> (q.x + q.y); c != 0) return c;
  return p.x <=> q.x;
}

std::vector<Subset> weightlex_sequence(unsigned n) {
  if (n > max_weightlex_ground)
    throw CapacityError("weightlex sequence on " + std::to_string(n) + " elements is too large");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for_each_weightlex(n, [&](Subset s) { out.push_back(s); });
  return out;
}

namespace {

std::uint64_t choose(unsigned a, unsigned b) {
  if (b > a) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

std::uint64_t weightlex_position(Subset x, unsigned n) {
  if (n > 63) throw CapacityError("weightlex rank supports ground sets up to 63");
  const auto w = static_cast<unsigned>(std::popcount(x));
  std::uint64_t rank = 0;
  for (unsigned smaller = 0; smaller < w; ++smaller) rank += choose(n, smaller);
  // Same-weight sets before x agree with x below some element e not in x
  // and contain e.
  unsigned remaining = w;
  for (unsigned e = 0; e < n && remaining > 0; ++e) {
    if ((x >> e) & 1U)
      --remaining;
    else
      rank += choose(n - e - 1, remaining - 1);
  }
  return rank + 1;
}

const std::vector<Vertex>& NestOrder::sequence(Part part) const {
  if (kind == OrderKind::full) {
    if (part != Part::all) throw InvalidParameter("a full order has no even/odd parts");
    return all;
  }
  if (part == Part::all) throw InvalidParameter("a bipartite order has no single sequence");
  return part == Part::even ? even : odd;
}

VertexSet initial_segment(const NestOrder& order, Part part, std::size_t k) {
  const auto& seq = order.sequence(part);
  if (k > seq.size())
    throw InvalidParameter("initial segment of size " + std::to_string(k) + " exceeds part size " +
                           std::to_string(seq.size()));
  return VertexSet::of(std::span(seq).first(k));
}

void validate_order(const Graph& g, const NestOrder& order) {
  std::vector<int> seen(g.vertex_count(), 0);
  auto mark = [&](const std::vector<Vertex>& seq) {
    for (auto v : seq) {
      if (v >= g.vertex_count()) throw InvalidOrder("order names vertex " + std::to_string(v) + " outside the graph");
      if (seen[v]++) throw InvalidOrder("order lists vertex " + std::to_string(v) + " twice");
    }
  };
  if (order.kind == OrderKind::full) {
    mark(order.all);
  } else {
    mark(order.even);
    mark(order.odd);
    for (const auto* part : {&order.even, &order.odd}) {
      auto members = VertexSet::of(*part);
      for (auto v : *part)
        for (auto w : g.neighbors(v))
          if (members.contains(w))
            throw InvalidOrder("edge {" + std::to_string(v) + "," + std::to_string(w) + "} lies inside one part");
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) throw InvalidOrder("order omits vertex " + std::to_string(v));
}

NestOrder weightlex_nest_order(unsigned n) {
  NestOrder order;
  order.kind = OrderKind::bipartite;
  for (auto s : weightlex_sequence(n)) (std::popcount(s) % 2 == 0 ? order.even : order.odd).push_back(static_cast<Vertex>(s));
  return order;
}

NestOrder weightlex_full_order(unsigned n) {
  NestOrder order;
  order.kind = OrderKind::full;
  for (auto s : weightlex_sequence(n)) order.all.push_back(static_cast<Vertex>(s));
  return order;
}

namespace {

std::vector<Vertex> grid_sequence(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidParameter("grid dimensions must be positive");
  std::vector<Vertex> cells(m * n);
  for (Vertex v = 0; v < cells.size(); ++v) cells[v] = v;
  auto point = [m, n](Vertex v) {
    long r = static_cast<long>(v / n), c = static_cast<long>(v % n);
    return m >= n ? GridPoint{r, c} : GridPoint{c, r};
  };
  std::sort(cells.begin(), cells.end(),
            [&](Vertex a, Vertex b) { return grid_compare(point(a), point(b)) < 0; });
  return cells;
}

}  // namespace

NestOrder grid_nest_order(std::size_t m, std::size_t n) {
  NestOrder order;
  order.kind = OrderKind::bipartite;
  for (auto v : grid_sequence(m, n)) ((v / n + v % n) % 2 == 0 ? order.even : order.odd).push_back(v);
  return order;
}

NestOrder grid_full_order(std::size_t m, std::size_t n) {
  NestOrder order;
  order.kind = OrderKind::full;
  order.all = grid_sequence(m, n);
  return order;
}

NestOrder index_nest_order(const Graph& g) {
  auto parts = bipartition(g);
  if (!parts) throw InvalidParameter("graph is not bipartite");
  NestOrder order;
  order.kind = OrderKind::bipartite;
  order.even = parts->even.members();
  order.odd = parts->odd.members();
  return order;
}

}  // namespace hunters
