#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "hunters/cube.hpp"
#include "hunters/error.hpp"

namespace hunters {

namespace {

constexpr unsigned max_family_ground = 30;

void require_ground(unsigned n) {
  if (n > max_family_ground)
    throw CapacityError("subset families support n <= " + std::to_string(max_family_ground));
}

void require_pair(unsigned n, unsigned i, unsigned j) {
  if (i < 1 || j <= i || j > n)
    throw InvalidParameter("compression pair must satisfy 1 <= i < j <= n");
}

void require_members(const Family& a, unsigned n) {
  const Subset full = n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
  for (auto x : a)
    if (x & ~full) throw InvalidParameter("family member outside {1.." + std::to_string(n) + "}");
}

// Removes bit positions p < q, shifting higher bits down.
Subset squeeze(Subset x, unsigned p, unsigned q) {
  auto low = x & ((Subset{1} << p) - 1);
  auto mid = (x >> (p + 1)) & ((Subset{1} << (q - p - 1)) - 1);
  auto high = x >> (q + 1);
  return low | (mid << p) | (high << (q - 1));
}

Subset unsqueeze(Subset y, unsigned p, unsigned q) {
  auto low = y & ((Subset{1} << p) - 1);
  auto mid = (y >> p) & ((Subset{1} << (q - p - 1)) - 1);
  auto high = y >> (q - 1);
  return low | (mid << (p + 1)) | (high << (q + 1));
}

Family sorted(Family f) {
  std::sort(f.begin(), f.end());
  return f;
}


}  // namespace

Family cube_neighborhood(const Family& a, unsigned n) {
  require_ground(n);
  require_members(a, n);
  Family out;
  out.reserve(a.size() * n);
  for (auto x : a)
    for (unsigned b = 0; b < n; ++b) out.push_back(x ^ (Subset{1} << b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Family initial_weightlex_segment(unsigned n, Part parity, std::size_t k) {
  require_ground(n);
  if (parity == Part::all) throw InvalidParameter("parity must be even or odd");
  Family out;
  out.reserve(k);
  if (k > 0) {
    // Members of one parity number 2^(n-1) (or 1 even, 0 odd when n = 0).
    std::size_t available = n == 0 ? (parity == Part::even ? 1 : 0) : std::size_t{1} << (n - 1);
    if (k > available)
      throw InvalidParameter("segment of size " + std::to_string(k) + " exceeds " + std::to_string(available));
    // Weights of the requested parity, enumerated in weightlex order.
    for (unsigned w = parity == Part::even ? 0 : 1; w <= n && out.size() < k; w += 2) {
      std::vector<unsigned> idx(w);
      for (unsigned t = 0; t < w; ++t) idx[t] = t;
      while (out.size() < k) {
        Subset s = 0;
        for (auto t : idx) s |= Subset{1} << t;
        out.push_back(s);
        unsigned pos = w;
        while (pos > 0 && idx[pos - 1] == n - w + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (auto t = pos; t < w; ++t) idx[t] = idx[t - 1] + 1;
      }
    }
  }
  return sorted(std::move(out));
}

CompressionDecomposition decompose(const Family& a, unsigned n, unsigned i, unsigned j) {
  require_ground(n);
  require_pair(n, i, j);
  require_members(a, n);
  const unsigned p = i - 1, q = j - 1;
  CompressionDecomposition d;
  d.ground = n - 2;
  for (auto x : a) {
    bool has_i = (x >> p) & 1, has_j = (x >> q) & 1;
    auto y = squeeze(x, p, q);
    if (has_i && has_j)
      d.q11.push_back(y);
    else if (has_i)
      d.q01.push_back(y);
    else if (has_j)
      d.q10.push_back(y);
    else
      d.q00.push_back(y);
  }
  for (auto* f : {&d.q00, &d.q01, &d.q10, &d.q11}) std::sort(f->begin(), f->end());
  return d;
}

Family reassemble(const CompressionDecomposition& d, unsigned n, unsigned i, unsigned j) {
  require_ground(n);
  require_pair(n, i, j);
  if (d.ground != n - 2) throw InvalidParameter("decomposition ground does not match n - 2");
  const unsigned p = i - 1, q = j - 1;
  const Subset bi = Subset{1} << p, bj = Subset{1} << q;
  Family out;
  for (auto y : d.q00) out.push_back(unsqueeze(y, p, q));
  for (auto y : d.q01) out.push_back(unsqueeze(y, p, q) | bi);
  for (auto y : d.q10) out.push_back(unsqueeze(y, p, q) | bj);
  for (auto y : d.q11) out.push_back(unsqueeze(y, p, q) | bi | bj);
  return sorted(std::move(out));
}

Family compress_ij(const Family& a, unsigned n, unsigned i, unsigned j) {
  for (auto x : a)
    if (std::popcount(x) % 2 != 0) throw InvalidParameter("compression expects even-weight members");
  auto d = decompose(sorted(a), n, i, j);
  const unsigned g = d.ground;
  d.q00 = initial_weightlex_segment(g, Part::even, d.q00.size());
  d.q01 = initial_weightlex_segment(g, Part::odd, d.q01.size());
  d.q10 = initial_weightlex_segment(g, Part::odd, d.q10.size());
  d.q11 = initial_weightlex_segment(g, Part::even, d.q11.size());
  return reassemble(d, n, i, j);
}

bool is_compressed(const Family& a, unsigned n) {
  auto s = sorted(a);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j)
      if (compress_ij(s, n, i, j) != s) return false;
  return true;
}

FullCompression compress_fully(const Family& a, unsigned n) {
  FullCompression result{sorted(a), 0};
  auto potential = position_potential(result.family, n);
  for (;;) {
    bool changed = false;
    for (unsigned i = 1; i <= n && !changed; ++i) {
      for (unsigned j = i + 1; j <= n && !changed; ++j) {
        auto next = compress_ij(result.family, n, i, j);
        if (next == result.family) continue;
        auto next_potential = position_potential(next, n);
        if (next_potential >= potential) throw std::logic_error("compression failed to decrease the position sum");
        result.family = std::move(next);
        potential = next_potential;
        ++result.steps;
        changed = true;
      }
    }
    if (!changed) return result;
  }
}

std::uint64_t position_potential(const Family& a, unsigned n) {
  std::uint64_t total = 0;
  for (auto x : a) total += weightlex_position(x, n);
  return total;
}

}  // namespace hunters
