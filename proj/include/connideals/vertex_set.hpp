#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace connideals {

/// A finite set of vertex indices in [0, 64), stored as a bitmask.
///
/// Serves as connected sets, monomial supports and simplicial faces alike.
/// Iteration is always ascending by index.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, ..., n-1}
  static VertexSet first(int n) {
    if (n < 0 || n > kCapacity) {
      throw std::out_of_range("vertex count " + std::to_string(n) +
                              " outside VertexSet capacity");
    }
    return from_bits(n >= kCapacity ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet singleton(int v) {
    check_index(v);
    return from_bits(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const {
    return v >= 0 && v < kCapacity && ((bits_ >> v) & 1U) != 0;
  }
  /// Smallest member; the set must be nonempty.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return kCapacity - 1 - std::countl_zero(bits_); }

  void insert(int v) {
    check_index(v);
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(int v) {
    check_index(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }
  VertexSet with(int v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(int v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }
  std::string to_string() const;

  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  static void check_index(int v) {
    if (v < 0 || v >= kCapacity) {
      throw std::out_of_range("vertex index " + std::to_string(v) +
                              " outside VertexSet capacity");
    }
  }

  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the ascending member tuples (a proper prefix
/// sorts first).
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  const std::uint64_t below = low - 1;  // a and b agree on these bits
  if ((a.bits() & low) != 0) {
    // a holds the smaller element at the first differing position, unless b
    // has already run out there.
    return (b.bits() & ~below) != 0;
  }
  return (a.bits() & ~below) == 0;
}

struct LexLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    std::uint64_t x = s.bits();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

}  // namespace connideals
