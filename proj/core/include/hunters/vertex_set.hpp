#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

namespace hunters {

using Vertex = std::uint32_t;

/// A finite set of vertex indices stored as a packed bitset.
///
/// The set has no fixed universe: storage grows on insertion and trailing
/// zero words are trimmed, so two sets compare equal exactly when they have
/// the same members.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    Vertex operator*() const { return current_; }
    const_iterator& operator++() {
      advance(current_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.current_ == b.current_;
    }

   private:
    friend class VertexSet;
    const_iterator(const VertexSet* set, Vertex from) : set_(set) { advance(from); }
    void advance(Vertex from);

    const VertexSet* set_ = nullptr;
    Vertex current_ = 0;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);

  template <class Range>
  static VertexSet of(const Range& members) {
    VertexSet s;
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  /// {0, 1, ..., n-1}.
  static VertexSet range(std::size_t n);

  bool contains(Vertex v) const noexcept {
    auto w = v / 64;
    return w < words_.size() && ((words_[w] >> (v % 64)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept { words_.clear(); }

  std::size_t size() const noexcept;
  bool empty() const noexcept { return words_.empty(); }

  std::optional<Vertex> min() const noexcept;
  std::optional<Vertex> max() const noexcept;

  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

  std::vector<Vertex> members() const;

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, end_marker()); }

  /// Low 64 members as a mask; valid only when max() < 64.
  std::uint64_t to_mask() const noexcept { return words_.empty() ? 0 : words_[0]; }
  static VertexSet from_mask(std::uint64_t mask);

  std::size_t hash() const noexcept;

 private:
  Vertex end_marker() const noexcept { return static_cast<Vertex>(words_.size() * 64); }
  void trim() noexcept;

  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace hunters
