#include "hunters/vertex_set.hpp"

#include <algorithm>

namespace hunters {

void VertexSet::const_iterator::advance(Vertex from) {
  const auto& words = set_->words_;
  std::size_t w = from / 64;
  if (w >= words.size()) {
    current_ = set_->end_marker();
    return;
  }
  std::uint64_t bits = words[w] & (~std::uint64_t{0} << (from % 64));
  while (bits == 0) {
    if (++w == words.size()) {
      current_ = set_->end_marker();
      return;
    }
    bits = words[w];
  }
  current_ = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (auto v : members) insert(v);
}

VertexSet VertexSet::range(std::size_t n) {
  VertexSet s;
  s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64 != 0) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  if (mask != 0) s.words_.push_back(mask);
  return s;
}

void VertexSet::insert(Vertex v) {
  auto w = v / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  auto w = v / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (v % 64));
  trim();
}

std::size_t VertexSet::size() const noexcept {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::optional<Vertex> VertexSet::min() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  return std::nullopt;
}

std::optional<Vertex> VertexSet::max() const noexcept {
  if (words_.empty()) return std::nullopt;
  auto w = words_.size() - 1;
  return static_cast<Vertex>(w * 64 + 63 - std::countl_zero(words_[w]));
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  trim();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
  trim();
  return *this;
}

std::vector<Vertex> VertexSet::members() const { return {begin(), end()}; }

std::size_t VertexSet::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

void VertexSet::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace hunters
