#include <random>

#include <gtest/gtest.h>

#include "hunters/cube.hpp"
#include "hunters/error.hpp"

using namespace hunters;

namespace {

Subset set_of(std::initializer_list<unsigned> elements) {
  Subset s = 0;
  for (auto e : elements) s |= Subset{1} << (e - 1);
  return s;
}

Family family(std::initializer_list<Subset> members) {
  Family f(members);
  std::sort(f.begin(), f.end());
  return f;
}

// |N(A)| by flipping every bit of every member.
std::size_t neighbourhood_size(const Family& a, unsigned n) {
  std::vector<char> hit(std::size_t{1} << n, 0);
  std::size_t count = 0;
  for (auto x : a)
    for (unsigned b = 0; b < n; ++b)
      if (!hit[x ^ (Subset{1} << b)]++) ++count;
  return count;
}

std::vector<Subset> even_side(unsigned n) {
  std::vector<Subset> out;
  for (Subset x = 0; x < (Subset{1} << n); ++x)
    if (std::popcount(x) % 2 == 0) out.push_back(x);
  return out;
}

void check_family(const Family& a, unsigned n) {
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) {
      auto c = compress_ij(a, n, i, j);
      ASSERT_EQ(c.size(), a.size());
      EXPECT_LE(neighbourhood_size(c, n), neighbourhood_size(a, n));
      for (auto x : c) EXPECT_EQ(std::popcount(x) % 2, 0);
    }
  auto full = compress_fully(a, n);
  EXPECT_TRUE(is_compressed(full.family, n));
  EXPECT_LE(full.steps, position_potential(a, n));
  auto segment = initial_weightlex_segment(n, Part::even, a.size());
  EXPECT_GE(neighbourhood_size(a, n), neighbourhood_size(segment, n));
  EXPECT_EQ(neighbourhood_size(segment, n), cube_neighborhood(segment, n).size());
}

}  // namespace

TEST(Compression, WorkedExample) {
  auto a = family({set_of({1, 4}), set_of({2, 3})});
  auto b = compress_ij(a, 4, 1, 2);
  EXPECT_EQ(b, family({set_of({1, 3}), set_of({2, 3})}));
  EXPECT_EQ(cube_neighborhood(a, 4).size(), 8u);
  EXPECT_EQ(cube_neighborhood(b, 4).size(), 6u);
  auto full = compress_fully(a, 4);
  EXPECT_TRUE(is_compressed(full.family, 4));
  EXPECT_LE(cube_neighborhood(full.family, 4).size(), 6u);
}

TEST(Compression, DecomposeReassemble) {
  auto a = family({0, set_of({1, 2}), set_of({1, 3}), set_of({2, 4}), set_of({1, 2, 3, 4})});
  auto d = decompose(a, 4, 1, 2);
  EXPECT_EQ(d.ground, 2u);
  EXPECT_EQ(d.q00.size() + d.q01.size() + d.q10.size() + d.q11.size(), a.size());
  EXPECT_EQ(d.q00, family({0}));
  EXPECT_EQ(d.q01, family({0b01}));
  EXPECT_EQ(d.q10, family({0b10}));
  EXPECT_EQ(d.q11, family({0, 0b11}));
  EXPECT_EQ(reassemble(d, 4, 1, 2), a);
}

TEST(Compression, InitialSegmentsAreFixed) {
  for (unsigned n = 2; n <= 6; ++n)
    for (std::size_t k = 0; k <= (std::size_t{1} << (n - 1)); ++k) {
      auto seg = initial_weightlex_segment(n, Part::even, k);
      EXPECT_TRUE(is_compressed(seg, n));
      EXPECT_EQ(compress_fully(seg, n).steps, 0u);
    }
}

TEST(Compression, RejectsBadInput) {
  EXPECT_THROW(compress_ij(family({set_of({1})}), 4, 1, 2), InvalidParameter);
  EXPECT_THROW(compress_ij(family({0}), 4, 2, 2), InvalidParameter);
  EXPECT_THROW(compress_ij(family({0}), 4, 1, 5), InvalidParameter);
  EXPECT_THROW(initial_weightlex_segment(3, Part::even, 5), InvalidParameter);
}

TEST(Compression, ExhaustiveOnQ4) {
  auto side = even_side(4);
  for (unsigned mask = 0; mask < (1u << side.size()); ++mask) {
    Family a;
    for (std::size_t t = 0; t < side.size(); ++t)
      if ((mask >> t) & 1) a.push_back(side[t]);
    check_family(a, 4);
  }
}

TEST(Compression, RandomFamiliesOnQ5AndQ6) {
  std::mt19937_64 rng(41);
  for (unsigned n : {5u, 6u}) {
    auto side = even_side(n);
    for (int t = 0; t < 500; ++t) {
      std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.05, 0.9)(rng));
      Family a;
      for (auto x : side)
        if (coin(rng)) a.push_back(x);
      check_family(a, n);
    }
  }
}
