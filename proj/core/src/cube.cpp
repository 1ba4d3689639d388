#include "hunters/cube.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "hunters/error.hpp"

namespace hunters {

BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long t = 1; t <= b; ++t) {
    r *= a - b + t;
    r /= t;
  }
  return r;
}

namespace {

constexpr std::size_t max_arrow_length = std::size_t{1} << 26;

void append_arrow(unsigned n, unsigned i, std::vector<long long>& out) {
  if (i == 0) {
    out.push_back(n);
    return;
  }
  if (n == 0) {
    out.push_back(0);
    return;
  }
  append_arrow(n, i - 1, out);
  append_arrow(n - 1, i, out);
}

BigInt sum_binomial(long from, long to, auto&& term) {
  BigInt total = 0;
  for (long t = from; t <= to; ++t) total += term(t);
  return total;
}

// -sum_{i=1}^{floor(n/2)-1} C(2i, i-1) + sum_{i=1}^{floor(n/2)-1} C(2i, i)
BigInt central_layer_terms(unsigned n) {
  const long top = static_cast<long>(n / 2) - 1;
  return sum_binomial(1, top, [](long i) { return binomial(2 * i, i); }) -
         sum_binomial(1, top, [](long i) { return binomial(2 * i, i - 1); });
}

void require_dimension(unsigned n, unsigned limit, const char* what) {
  if (n > limit)
    throw CapacityError(std::string(what) + " supports n <= " + std::to_string(limit));
}

}  // namespace

ArrowSeq arrow_seq(unsigned n, unsigned i) {
  if (arrow_len(n, i) > max_arrow_length) throw CapacityError("arrow sequence too long to materialise");
  ArrowSeq seq{n, i, {}};
  seq.values.reserve(static_cast<std::size_t>(arrow_len(n, i)));
  append_arrow(n, i, seq.values);
  return seq;
}

BigInt arrow_len(unsigned n, unsigned i) { return binomial(static_cast<long>(n + i), static_cast<long>(i)); }

BigInt arrow_sum(unsigned n, unsigned i) { return binomial(static_cast<long>(n + i), static_cast<long>(i + 1)); }

std::vector<long long> DiffSeq::prefix_sums() const {
  std::vector<long long> out;
  out.reserve(values.size());
  long long running = 0;
  for (auto v : values) out.push_back(running += v);
  return out;
}

DiffSeq layer_diff_seq(unsigned n, unsigned i) {
  if (i > n) throw InvalidParameter("layer " + std::to_string(i) + " exceeds dimension " + std::to_string(n));
  require_dimension(n, max_sequence_dimension, "layer difference sequence");
  DiffSeq d;
  d.n = n;
  d.layer = i;
  d.side = i % 2 == 0 ? Part::even : Part::odd;
  if (i == 0) {
    d.values = {static_cast<long long>(n)};
  } else if (i == 1) {
    // The first vertex of layer 1 also covers the empty set below it.
    d.values = {static_cast<long long>(n)};
    if (n >= 2) {
      auto tail = arrow_seq(n - 2, 1).values;
      d.values.insert(d.values.end(), tail.begin(), tail.end());
    }
  } else {
    d.values = arrow_seq(n - i, i).values;
  }
  return d;
}

DiffSeq cube_diff_seq(unsigned n, Part side) {
  if (n == 0) throw InvalidParameter("cube difference sequence needs n >= 1");
  if (side == Part::all) throw InvalidParameter("side must be even or odd");
  require_dimension(n, max_sequence_dimension, "cube difference sequence");
  DiffSeq d;
  d.n = n;
  d.side = side;
  for (unsigned i = side == Part::even ? 0 : 1; i <= n; i += 2) {
    auto layer = layer_diff_seq(n, i).values;
    d.values.insert(d.values.end(), layer.begin(), layer.end());
  }
  return d;
}

long long cube_mun(unsigned n, std::size_t k, Part side) {
  auto d = cube_diff_seq(n, side);
  if (k == 0 || k > d.values.size())
    throw InvalidParameter("k = " + std::to_string(k) + " outside 1.." + std::to_string(d.values.size()));
  long long total = 0;
  for (std::size_t t = 0; t < k; ++t) total += d.values[t];
  return total;
}

ScanMaximum last_running_maximum(const std::vector<long long>& diffs) {
  ScanMaximum best{0, std::numeric_limits<long long>::min()};
  long long running = 0;
  for (std::size_t k = 1; k <= diffs.size(); ++k) {
    running += diffs[k - 1];
    auto value = running - static_cast<long long>(k);
    if (value >= best.value) best = {k, value};
  }
  return best;
}

long long cube_u(unsigned n) { return last_running_maximum(cube_diff_seq(n, Part::even).values).value; }

BigInt hun_qn(unsigned n) {
  if (n == 0) throw InvalidParameter("hypercube dimension must be positive");
  return 1 + sum_binomial(0, static_cast<long>(n) - 2, [](long i) { return binomial(i, i / 2); });
}

BigInt hun_qn_upper(unsigned n) { return binomial(n, n / 2); }

BigInt cumbersome_max(unsigned n) {
  if (n < 2) throw InvalidParameter("closed form needs n >= 2");
  const long top = static_cast<long>((n + 3) / 4) - 1;
  const long nn = static_cast<long>(n);
  BigInt outer;
  if (n % 4 == 0 || n % 4 == 3) {
    outer = sum_binomial(0, top, [nn](long i) { return binomial(nn, 2 * i + 1); }) -
            sum_binomial(0, top, [nn](long i) { return binomial(nn, 2 * i); });
  } else {
    outer = sum_binomial(0, top, [nn](long i) { return binomial(nn, 2 * i); }) -
            sum_binomial(0, top, [nn](long i) { return binomial(nn, 2 * i - 1); });
  }
  return outer + central_layer_terms(n);
}

namespace {

void require_messlemma_range(unsigned n, unsigned i) {
  if (i < 1 || n <= i) throw InvalidParameter("requires n > i >= 1");
}

}  // namespace

BigInt messlemma_position(unsigned n, unsigned i) {
  require_messlemma_range(n, i);
  const long ii = static_cast<long>(i);
  return 1 + sum_binomial(1, ii - 1, [](long j) { return binomial(2 * j, j - 1); }) +
         sum_binomial(ii + 1, static_cast<long>(n), [ii](long j) { return binomial(j + ii - 1, ii - 1); });
}

BigInt messlemma_value(unsigned n, unsigned i) {
  require_messlemma_range(n, i);
  const long ii = static_cast<long>(i);
  BigInt total = sum_binomial(1, ii - 1, [](long j) { return binomial(2 * j, j); }) +
                 sum_binomial(ii + 1, static_cast<long>(n), [ii](long j) { return binomial(j + ii - 1, ii); });
  return total - messlemma_position(n, i);
}

ScanMaximum messlemma_scan(unsigned n, unsigned i) {
  require_messlemma_range(n, i);
  return last_running_maximum(arrow_seq(n, i).values);
}

long long deaf_u_qn_scan(unsigned n) {
  if (n == 0) throw InvalidParameter("hypercube dimension must be positive");
  require_dimension(n, max_sequence_dimension, "closed coverage scan");
  std::vector<std::uint64_t> covered(((std::size_t{1} << n) + 63) / 64, 0);
  auto cover = [&](Subset x) {
    auto& word = covered[x / 64];
    auto bit = std::uint64_t{1} << (x % 64);
    if (word & bit) return 0;
    word |= bit;
    return 1;
  };
  long long count = 0, k = 0;
  long long best = std::numeric_limits<long long>::min();
  for_each_weightlex(n, [&](Subset v) {
    count += cover(v);
    for (unsigned b = 0; b < n; ++b) count += cover(v ^ (Subset{1} << b));
    ++k;
    best = std::max(best, count - k);
  });
  return best;
}

BigInt deaf_hun_qn_formula(unsigned n) {
  if (n == 0) throw InvalidParameter("hypercube dimension must be positive");
  return binomial(n, (n + 1) / 2) + central_layer_terms(n);
}

}  // namespace hunters
