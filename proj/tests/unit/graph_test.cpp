#include <random>

#include <gtest/gtest.h>

#include "hunters/error.hpp"
#include "hunters/families.hpp"
#include "hunters/graph.hpp"
#include "oracles.hpp"

using namespace hunters;

namespace {

std::vector<std::size_t> sizes(const std::vector<VertexSet>& parts) {
  std::vector<std::size_t> out;
  for (const auto& p : parts) out.push_back(p.size());
  return out;
}

}  // namespace

TEST(VertexSet, AlgebraAndTrimming) {
  VertexSet a{1, 3, 70};
  VertexSet b{3, 4};
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ((a | b), (VertexSet{1, 3, 4, 70}));
  EXPECT_EQ((a & b), (VertexSet{3}));
  EXPECT_EQ((a - b), (VertexSet{1, 70}));
  auto c = a;
  c.erase(70);
  EXPECT_EQ(c, (VertexSet{1, 3}));
  EXPECT_EQ(c.hash(), (VertexSet{1, 3}).hash());
  EXPECT_TRUE((VertexSet{3}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_EQ(*a.min(), 1u);
  EXPECT_EQ(*a.max(), 70u);
  EXPECT_EQ(VertexSet::range(4), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(VertexSet::from_mask(0b1010).members(), (std::vector<Vertex>{1, 3}));
  EXPECT_TRUE(VertexSet().empty());
}

TEST(Graph, RejectsMalformedEdges) {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> twice{{0, 1}, {1, 0}};
  std::vector<Edge> far{{0, 5}};
  EXPECT_THROW(Graph(3, loop), ValidationError);
  EXPECT_THROW(Graph(3, twice), ValidationError);
  EXPECT_THROW(Graph(3, far), ValidationError);
}

TEST(Families, Paths) {
  auto p1 = build_path(1);
  EXPECT_EQ(p1.vertex_count(), 1u);
  EXPECT_EQ(p1.edge_count(), 0u);
  auto p4 = build_path(4);
  EXPECT_EQ(p4.edge_count(), 3u);
  auto parts = bipartition(p4);
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->even, (VertexSet{0, 2}));
  EXPECT_EQ(parts->odd, (VertexSet{1, 3}));
  EXPECT_EQ(build_path(5).degree_sequence(), (std::vector<std::size_t>{1, 2, 2, 2, 1}));
  EXPECT_THROW(build_path(0), InvalidParameter);
}

TEST(Families, Cycles) {
  auto c3 = build_cycle(3);
  EXPECT_EQ(c3.edge_count(), 3u);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = u + 1; v < 3; ++v) EXPECT_TRUE(c3.adjacent(u, v));
  EXPECT_FALSE(bipartition(build_cycle(5)));
  EXPECT_TRUE(bipartition(build_cycle(6)));
  EXPECT_THROW(build_cycle(2), InvalidParameter);
  // C_4 and Q^2 are both 2-regular on four vertices with a 2/2 bipartition.
  EXPECT_EQ(build_cycle(4).degree_sequence(), build_hypercube(2).degree_sequence());
  EXPECT_EQ(build_cycle(4).edge_count(), build_hypercube(2).edge_count());
}

TEST(Families, Grids) {
  EXPECT_EQ(build_grid(2, 3).vertex_count(), 6u);
  EXPECT_EQ(build_grid(2, 3).edge_count(), 7u);
  EXPECT_EQ(build_grid(3, 3).edge_count(), 12u);
  auto line = build_grid(1, 5);
  EXPECT_EQ(line.edges(), build_path(5).edges());
  EXPECT_EQ(build_grid(2, 3).label(4), "1,1");
  EXPECT_THROW(build_grid(0, 3), InvalidParameter);
  auto dims = recognize_grid(build_grid(3, 4));
  ASSERT_TRUE(dims);
  EXPECT_EQ(*dims, (std::pair<std::size_t, std::size_t>{3, 4}));
  EXPECT_FALSE(recognize_grid(build_path(4)));
}

TEST(Families, Hypercubes) {
  auto q3 = build_hypercube(3);
  EXPECT_EQ(q3.vertex_count(), 8u);
  EXPECT_EQ(q3.edge_count(), 12u);
  EXPECT_EQ(build_hypercube(0).vertex_count(), 1u);
  EXPECT_EQ(q3.label(0b011), "110");
  EXPECT_EQ(hypercube_label(0b1001, 4), "1001");
  EXPECT_EQ(recognize_hypercube(q3), 3u);
  EXPECT_FALSE(recognize_hypercube(build_cycle(8)));
  EXPECT_THROW(build_hypercube(max_hypercube_dimension + 1), CapacityError);
  auto q5 = build_hypercube(5);
  for (Vertex u = 0; u < 32; ++u) {
    EXPECT_EQ(q5.degree(u), 5u);
    for (Vertex v = 0; v < 32; ++v) EXPECT_EQ(q5.adjacent(u, v), std::popcount(u ^ v) == 1);
  }
  auto parts = bipartition(q3);
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->even, (VertexSet{0, 3, 5, 6}));
}

TEST(Families, Stars) {
  EXPECT_EQ(build_star(1).edges(), build_path(2).edges());
  EXPECT_EQ(build_star(4).degree_sequence(), (std::vector<std::size_t>{4, 1, 1, 1, 1}));
  auto s2 = build_star(2);
  auto p3 = build_path(3);
  auto ds = s2.degree_sequence(), dp = p3.degree_sequence();
  std::sort(ds.begin(), ds.end());
  std::sort(dp.begin(), dp.end());
  EXPECT_EQ(ds, dp);
  EXPECT_EQ(s2.edge_count(), p3.edge_count());
}

TEST(Neighborhood, OpenAndClosed) {
  auto q3 = build_hypercube(3);
  EXPECT_EQ(neighborhood(q3, VertexSet{0}, NeighborhoodMode::open), (VertexSet{1, 2, 4}));
  EXPECT_EQ(neighborhood(build_cycle(4), VertexSet{0}, NeighborhoodMode::closed), (VertexSet{0, 1, 3}));
  EXPECT_EQ(neighborhood(build_hypercube(4), VertexSet{0, 1}, NeighborhoodMode::closed).size(), 8u);
  EXPECT_TRUE(neighborhood(q3, VertexSet{}, NeighborhoodMode::closed).empty());
}

TEST(Neighborhood, ClosedAddsExactlyTheMissingMembers) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    auto n = 1 + rng() % 20;
    auto g = oracle::random_graph(rng, n, 0.25);
    auto s = oracle::random_subset(rng, n, 0.3);
    auto t2 = s | oracle::random_subset(rng, n, 0.3);
    auto open = neighborhood(g, s, NeighborhoodMode::open);
    auto closed = neighborhood(g, s, NeighborhoodMode::closed);
    EXPECT_TRUE(open.is_subset_of(closed));
    EXPECT_EQ(closed - open, s - open);
    for (auto mode : {NeighborhoodMode::open, NeighborhoodMode::closed})
      EXPECT_TRUE(neighborhood(g, s, mode).is_subset_of(neighborhood(g, t2, mode)));
  }
}

TEST(Bipartition, ProperColouringOnFamilies) {
  std::vector<Graph> family{build_path(7), build_cycle(8), build_grid(4, 5), build_hypercube(6), build_star(9),
                            disjoint_union(build_path(3), build_cycle(4))};
  for (const auto& g : family) {
    auto parts = bipartition(g);
    ASSERT_TRUE(parts);
    EXPECT_FALSE(parts->even.intersects(parts->odd));
    EXPECT_EQ((parts->even | parts->odd), VertexSet::range(g.vertex_count()));
    for (auto [u, v] : g.edges()) EXPECT_NE(parts->even.contains(u), parts->even.contains(v));
  }
}

TEST(Degeneracy, KnownValues) {
  EXPECT_EQ(degeneracy(build_path(5)), 1u);
  EXPECT_EQ(degeneracy(build_hypercube(3)), 3u);
  EXPECT_EQ(degeneracy(build_grid(3, 3)), 2u);
  EXPECT_EQ(degeneracy(Graph(0)), 0u);
}

TEST(Degeneracy, MatchesInducedMinimumDegreeOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto n = 1 + rng() % 11;
    auto g = oracle::random_graph(rng, n, 0.15 + 0.6 * (rng() % 100) / 100.0);
    EXPECT_EQ(degeneracy(g), oracle::degeneracy(g)) << "trial " << t;
  }
}

TEST(Components, OrderedByLowestVertex) {
  EXPECT_EQ(components(build_cycle(5)).size(), 1u);
  auto parts = components(disjoint_union(build_path(2), build_path(3)));
  EXPECT_EQ(sizes(parts), (std::vector<std::size_t>{2, 3}));
  EXPECT_TRUE(components(Graph(0)).empty());
  auto sub = induced_subgraph(build_path(5), VertexSet{1, 2, 4});
  EXPECT_EQ(sub.graph.edge_count(), 1u);
  EXPECT_EQ(sub.original, (std::vector<Vertex>{1, 2, 4}));
}

TEST(Homomorphism, WeightMapOntoPath) {
  for (unsigned n : {3u, 4u}) {
    auto q = build_hypercube(n);
    std::vector<Vertex> weight(q.vertex_count());
    for (Vertex v = 0; v < weight.size(); ++v) weight[v] = std::popcount(v);
    EXPECT_EQ(homomorphism_bound(q, build_path(n + 1), weight, 1), oracle::binomial(n, n / 2));
  }
  auto c5 = build_cycle(5);
  std::vector<Vertex> id{0, 1, 2, 3, 4};
  EXPECT_EQ(homomorphism_bound(c5, c5, id, 2), 2u);
  std::vector<Vertex> squash{0, 0, 1, 2, 3};
  EXPECT_THROW(homomorphism_bound(c5, build_path(4), squash, 1), ValidationError);
}
