#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace connideals::detail {

// Dynamic bitset over generator indices; used as a memo key.
class IndexSet {
 public:
  explicit IndexSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  bool operator==(const IndexSet&) const = default;

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace connideals::detail
