#include "hunters/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <unordered_set>

#include "hunters/error.hpp"

namespace hunters {

namespace {

using Mask = std::uint64_t;

// Largest vertex count for which dominance uses a dense 2^n bitmap.
constexpr std::size_t dense_dominance_limit = 24;

void require_mask_capacity(const Graph& g, const char* what) {
  if (g.vertex_count() > max_brute_force_vertices)
    throw CapacityError(std::string(what) + " supports at most " +
                        std::to_string(max_brute_force_vertices) + " vertices");
}

std::vector<Mask> neighbourhood_masks(const Graph& g, NeighborhoodMode mode) {
  std::vector<Mask> out(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (auto w : g.neighbors(v)) out[v] |= Mask{1} << w;
    if (mode == NeighborhoodMode::closed) out[v] |= Mask{1} << v;
  }
  return out;
}

Mask neighbourhood_of(Mask set, const std::vector<Mask>& nbr) {
  Mask out = 0;
  while (set != 0) {
    out |= nbr[std::countr_zero(set)];
    set &= set - 1;
  }
  return out;
}

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
  void spend() {
    if (++used_ > limit_)
      throw BudgetExceeded("enumeration budget of " + std::to_string(limit_) + " nodes exceeded");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Lexicographic k-subset streaming with a running union; a branch stops as
// soon as its partial union is no better than the best complete one.
class MunSearch {
 public:
  MunSearch(std::vector<Mask> candidate_nbrs, NodeBudget& budget)
      : nbrs_(std::move(candidate_nbrs)), budget_(budget) {}

  std::size_t run(std::size_t k) {
    k_ = k;
    best_ = std::numeric_limits<std::size_t>::max();
    descend(0, 0, 0);
    return best_;
  }

 private:
  void descend(std::size_t next, std::size_t chosen, Mask uni) {
    budget_.spend();
    auto size = static_cast<std::size_t>(std::popcount(uni));
    if (size >= best_) return;
    if (chosen == k_) {
      best_ = size;
      return;
    }
    for (std::size_t i = next; i + (k_ - chosen) <= nbrs_.size(); ++i) descend(i + 1, chosen + 1, uni | nbrs_[i]);
  }

  std::vector<Mask> nbrs_;
  NodeBudget& budget_;
  std::size_t k_ = 0;
  std::size_t best_ = 0;
};

std::vector<Mask> candidate_nbrs(const Graph& g, const VertexSet& candidates, NeighborhoodMode mode) {
  require_mask_capacity(g, "mun enumeration");
  auto all = neighbourhood_masks(g, mode);
  std::vector<Mask> out;
  for (auto v : candidates) {
    if (v >= g.vertex_count()) throw InvalidParameter("candidate vertex out of range");
    out.push_back(all[v]);
  }
  return out;
}

// Set of visited states, answering "is some visited state a subset of s".
class DominanceFilter {
 public:
  explicit DominanceFilter(std::size_t n) : n_(n) {
    if (n_ <= dense_dominance_limit) dense_.assign(((std::size_t{1} << n_) + 63) / 64, 0);
  }

  bool dominated(Mask s) const {
    if (!dense_.empty()) return test(s);
    return exact_.contains(s);
  }

  void insert(Mask s) {
    if (dense_.empty()) {
      exact_.insert(s);
      return;
    }
    // Mark the whole upward closure; every mask is marked at most once.
    stack_.clear();
    stack_.push_back(s);
    const Mask full = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    while (!stack_.empty()) {
      auto x = stack_.back();
      stack_.pop_back();
      if (test(x)) continue;
      set(x);
      for (Mask free = full & ~x; free != 0; free &= free - 1) {
        auto y = x | (free & -free);
        if (!test(y)) stack_.push_back(y);
      }
    }
  }

 private:
  bool test(Mask s) const { return ((dense_[s / 64] >> (s % 64)) & 1U) != 0; }
  void set(Mask s) { dense_[s / 64] |= Mask{1} << (s % 64); }

  std::size_t n_;
  std::vector<Mask> dense_;
  std::unordered_set<Mask> exact_;
  std::vector<Mask> stack_;
};

struct Node {
  Mask state;
  std::size_t parent;
  Mask shot;
};

// Calls visit(h) for each k-subset h of `set` in lexicographic order of
// members; stops early when visit returns true.
template <class Visit>
bool for_each_k_subset(Mask set, std::size_t k, Visit&& visit) {
  std::vector<Mask> bits;
  for (Mask s = set; s != 0; s &= s - 1) bits.push_back(s & -s);
  const std::size_t r = bits.size();
  if (k > r) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask h = 0;
    for (auto i : idx) h |= bits[i];
    if (visit(h)) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == r - k + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (auto j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Strategy rebuild(const std::vector<Node>& nodes, std::size_t last, Mask final_shot, Variant variant) {
  std::vector<Mask> shots{final_shot};
  for (auto i = last; nodes[i].parent != i; i = nodes[i].parent) shots.push_back(nodes[i].shot);
  Strategy s{{}, variant};
  for (auto it = shots.rbegin(); it != shots.rend(); ++it) s.shots.push_back(VertexSet::from_mask(*it));
  return s;
}

}  // namespace

std::vector<long long> MunProfile::differences() const {
  std::vector<long long> out;
  long long previous = 0;
  for (auto v : values) {
    out.push_back(static_cast<long long>(v) - previous);
    previous = static_cast<long long>(v);
  }
  return out;
}

long long MunProfile::u() const {
  if (values.empty()) throw InvalidParameter("u is undefined on an empty side");
  long long best = std::numeric_limits<long long>::min();
  for (std::size_t k = 1; k <= values.size(); ++k)
    best = std::max(best, static_cast<long long>(values[k - 1]) - static_cast<long long>(k));
  return best;
}

VertexSet side_vertices(const Graph& g, Side side) {
  if (side == Side::all) return g.vertices();
  auto parts = bipartition(g);
  if (!parts) throw InvalidParameter("even/odd side requires a bipartite graph");
  return side == Side::even ? parts->even : parts->odd;
}

std::size_t mun_over(const Graph& g, std::size_t k, const VertexSet& candidates,
                     NeighborhoodMode mode, std::uint64_t budget) {
  if (k == 0 || k > candidates.size())
    throw InvalidParameter("k = " + std::to_string(k) + " outside 1.." + std::to_string(candidates.size()));
  NodeBudget nodes(budget);
  MunSearch search(candidate_nbrs(g, candidates, mode), nodes);
  return search.run(k);
}

std::size_t mun(const Graph& g, std::size_t k, Side side, NeighborhoodMode mode, std::uint64_t budget) {
  return mun_over(g, k, side_vertices(g, side), mode, budget);
}

std::vector<std::size_t> mun_profile_over(const Graph& g, const VertexSet& candidates,
                                          NeighborhoodMode mode, std::uint64_t budget) {
  NodeBudget nodes(budget);
  MunSearch search(candidate_nbrs(g, candidates, mode), nodes);
  std::vector<std::size_t> values;
  for (std::size_t k = 1; k <= candidates.size(); ++k) values.push_back(search.run(k));
  return values;
}

MunProfile mun_profile(const Graph& g, Side side, NeighborhoodMode mode, std::uint64_t budget) {
  return MunProfile{side, mode, mun_profile_over(g, side_vertices(g, side), mode, budget)};
}

long long u_value(const Graph& g, Side side, NeighborhoodMode mode, std::uint64_t budget) {
  return mun_profile(g, side, mode, budget).u();
}

std::size_t lower_bound_mun(const Graph& g, NeighborhoodMode mode, std::uint64_t budget) {
  if (g.vertex_count() == 0) return 1;
  auto m0 = u_value(g, Side::all, mode, budget);
  return static_cast<std::size_t>(std::max<long long>(1, m0 + 1));
}

std::size_t lower_bound_degeneracy(const Graph& g) { return std::max<std::size_t>(1, degeneracy(g)); }

ClearResult can_clear(const Graph& g, std::size_t k, Variant variant, std::uint64_t budget,
                      std::optional<VertexSet> start) {
  if (k == 0) throw InvalidParameter("hunter count must be positive");
  require_mask_capacity(g, "exact search");
  const auto n = g.vertex_count();
  const auto nbr = neighbourhood_masks(g, neighborhood_mode(variant));
  Mask initial = 0;
  if (start) {
    if (start->max() && *start->max() >= n) throw InvalidParameter("start set outside the graph");
    initial = start->to_mask();
  } else {
    initial = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  ClearResult result;
  if (initial == 0) {
    result.outcome = ClearResult::Outcome::cleared;
    result.witness = Strategy{{}, variant};
    return result;
  }

  DominanceFilter seen(n);
  std::vector<Node> nodes{{initial, 0, 0}};
  seen.insert(initial);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    ++result.explored_states;
    const Mask rabbits = nodes[head].state;
    if (static_cast<std::size_t>(std::popcount(rabbits)) <= k) {
      result.outcome = ClearResult::Outcome::cleared;
      result.witness = rebuild(nodes, head, rabbits, variant);
      return result;
    }
    std::optional<Mask> winning_shot;
    bool exhausted = false;
    for_each_k_subset(rabbits, k, [&](Mask shot) {
      if (result.evaluated_shots == budget) {
        exhausted = true;
        return true;
      }
      ++result.evaluated_shots;
      Mask next = neighbourhood_of(rabbits & ~shot, nbr);
      if (next == 0) {
        winning_shot = shot;
        return true;
      }
      if (!seen.dominated(next)) {
        seen.insert(next);
        nodes.push_back({next, head, shot});
      }
      return false;
    });
    if (winning_shot) {
      result.outcome = ClearResult::Outcome::cleared;
      result.witness = rebuild(nodes, head, *winning_shot, variant);
      return result;
    }
    if (exhausted) {
      result.outcome = ClearResult::Outcome::budget_exceeded;
      return result;
    }
  }
  result.outcome = ClearResult::Outcome::blocked;
  return result;
}

SolveResult exact_hun(const Graph& g, Variant variant, std::uint64_t budget) {
  if (g.vertex_count() == 0) throw InvalidParameter("graph has no vertices");
  require_mask_capacity(g, "exact search");
  SolveResult result;
  result.witness.variant = variant;
  for (const auto& comp : components(g)) {
    auto sub = induced_subgraph(g, comp);
    auto lower = lower_bound_degeneracy(sub.graph);
    try {
      lower = std::max(lower, lower_bound_mun(sub.graph, neighborhood_mode(variant), budget));
    } catch (const BudgetExceeded&) {
      // mun enumeration too large; the degeneracy bound alone stays sound
    }
    result.lower_bound_used = std::max(result.lower_bound_used, lower);
    for (auto k = lower;; ++k) {
      auto remaining = budget > result.evaluated_shots ? budget - result.evaluated_shots : 0;
      auto attempt = can_clear(sub.graph, k, variant, remaining);
      result.explored_states += attempt.explored_states;
      result.evaluated_shots += attempt.evaluated_shots;
      if (attempt.outcome == ClearResult::Outcome::budget_exceeded)
        throw BudgetExceeded("search budget of " + std::to_string(budget) + " shots exceeded at k = " +
                                 std::to_string(k),
                             std::max(k, result.hunter_number));
      if (attempt.outcome == ClearResult::Outcome::blocked) continue;
      Strategy mapped{{}, variant};
      for (const auto& shot : attempt.witness->shots) {
        VertexSet global;
        for (auto v : shot) global.insert(sub.original[v]);
        mapped.shots.push_back(std::move(global));
      }
      result.witness = concatenate(result.witness, mapped);
      result.hunter_number = std::max(result.hunter_number, k);
      break;
    }
  }
  return result;
}

ParitySolveResult parity_hun(const Graph& g, std::uint64_t budget) {
  auto parts = bipartition(g);
  if (!parts) throw InvalidParameter("parity search requires a bipartite graph");
  if (g.vertex_count() == 0) throw InvalidParameter("graph has no vertices");
  for (std::size_t k = 1;; ++k) {
    for (auto side : {StartSide::even, StartSide::odd}) {
      const auto& part = side == StartSide::even ? parts->even : parts->odd;
      auto attempt = can_clear(g, k, Variant::standard, budget, part);
      if (attempt.outcome == ClearResult::Outcome::budget_exceeded)
        throw BudgetExceeded("parity search budget exceeded at k = " + std::to_string(k), k);
      if (attempt.outcome == ClearResult::Outcome::cleared) return {k, side, *attempt.witness};
    }
  }
}

}  // namespace hunters
