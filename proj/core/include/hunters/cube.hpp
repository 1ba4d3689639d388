#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hunters/graph.hpp"
#include "hunters/orders.hpp"

namespace hunters {

using BigInt = boost::multiprecision::cpp_int;

/// C(a, b), zero when b < 0 or b > a.
BigInt binomial(long a, long b);

// Largest ground dimension for analytic sequences of length 2^(n-1).
inline constexpr unsigned max_sequence_dimension = 24;

/// The arrow sequence n^i: n^0 = (n), 0^i = (0), n^i = n^(i-1) . (n-1)^i.
struct ArrowSeq {
  unsigned n = 0;
  unsigned i = 0;
  std::vector<long long> values;
};

ArrowSeq arrow_seq(unsigned n, unsigned i);
/// C(n+i, i).
BigInt arrow_len(unsigned n, unsigned i);
/// C(n+i, i+1).
BigInt arrow_sum(unsigned n, unsigned i);

/// First differences of a mun profile of Q^n, restricted to one weight
/// layer (`layer` set) or assembled over one parity side.
struct DiffSeq {
  std::vector<long long> values;
  unsigned n = 0;
  Part side = Part::even;
  std::optional<unsigned> layer;
  NeighborhoodMode mode = NeighborhoodMode::open;

  std::vector<long long> prefix_sums() const;
};

/// Layer i of Q^n: (n) for i = 0, n followed by (n-2)^1 for i = 1, and
/// (n-i)^i otherwise.
DiffSeq layer_diff_seq(unsigned n, unsigned i);

/// Layers of one parity concatenated in increasing weight.
DiffSeq cube_diff_seq(unsigned n, Part side);

/// Prefix sum of cube_diff_seq at k (1-based).
long long cube_mun(unsigned n, std::size_t k, Part side);

/// max_k (mun_even(k) - k) on Q^n, scanned over the difference sequence.
long long cube_u(unsigned n);

/// 1 + sum_{i=0}^{n-2} C(i, floor(i/2)).
BigInt hun_qn(unsigned n);

/// C(n, floor(n/2)), from the weight homomorphism onto a path.
BigInt hun_qn_upper(unsigned n);

/// Closed-form maximum of mun(k) - k on Q^n, two branches by n mod 4.
BigInt cumbersome_max(unsigned n);

/// Closed-form position and value of a maximum of the running
/// (prefix sum - k) within n^i, for n > i >= 1. Evaluated as written.
BigInt messlemma_position(unsigned n, unsigned i);
BigInt messlemma_value(unsigned n, unsigned i);

struct ScanMaximum {
  std::size_t position = 0;  // 1-based, last occurrence
  long long value = 0;
};

/// Last maximum of (prefix sum - k) over a sequence.
ScanMaximum last_running_maximum(const std::vector<long long>& diffs);

/// last_running_maximum over arrow_seq(n, i).
ScanMaximum messlemma_scan(unsigned n, unsigned i);

/// max_k (|N[first k]| - k) along the full weightlex order of Q^n.
long long deaf_u_qn_scan(unsigned n);

/// C(n, ceil(n/2)) - sum C(2i, i-1) + sum C(2i, i), i = 1..floor(n/2)-1.
BigInt deaf_hun_qn_formula(unsigned n);

// --- compression -----------------------------------------------------------

/// Family of subsets of {1..n}, kept sorted by mask value.
using Family = std::vector<Subset>;

/// N(A) in Q^n.
Family cube_neighborhood(const Family& a, unsigned n);

/// First k subsets of the given parity (even/odd) in weightlex order.
Family initial_weightlex_segment(unsigned n, Part parity, std::size_t k);

/// Quadrants of A by membership of elements i and j, each re-encoded over
/// the n-2 remaining elements (order preserved).
///   q00: i, j not in x    q01: i in x only
///   q10: j in x only      q11: i, j in x
struct CompressionDecomposition {
  unsigned ground = 0;  // n - 2
  Family q00, q01, q10, q11;
};

CompressionDecomposition decompose(const Family& a, unsigned n, unsigned i, unsigned j);
Family reassemble(const CompressionDecomposition& d, unsigned n, unsigned i, unsigned j);

/// (i, j)-compression of a family of even-weight subsets: every quadrant is
/// replaced by the weightlex initial segment of matching parity and size.
/// Elements i, j are 1-based. Throws InvalidParameter on odd-weight members.
Family compress_ij(const Family& a, unsigned n, unsigned i, unsigned j);

bool is_compressed(const Family& a, unsigned n);

struct FullCompression {
  Family family;
  std::size_t steps = 0;
};

/// Applies the lowest violated (i, j) compression until none applies. The
/// sum of weightlex positions strictly decreases at every step.
FullCompression compress_fully(const Family& a, unsigned n);

/// Sum of 1-based weightlex positions.
std::uint64_t position_potential(const Family& a, unsigned n);

}  // namespace hunters
