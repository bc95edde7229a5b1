#include "connideals/exact_rank.hpp"

#include <bit>

namespace connideals {

std::size_t rank_gf2(const SparseIntMatrix& m) {
  const std::size_t words = (static_cast<std::size_t>(m.cols) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots(static_cast<std::size_t>(m.cols));
  std::vector<bool> used(static_cast<std::size_t>(m.cols), false);
  std::size_t rank = 0;
  std::vector<std::uint64_t> row(words);
  for (const auto& input : m.rows) {
    std::fill(row.begin(), row.end(), 0);
    for (auto [c, v] : input) {
      if (v % 2 != 0) row[static_cast<std::size_t>(c) / 64] ^= std::uint64_t{1} << (c % 64);
    }
    for (std::size_t w = 0; w < words;) {
      if (row[w] == 0) {
        ++w;
        continue;
      }
      const std::size_t lead = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
      if (!used[lead]) {
        used[lead] = true;
        pivots[lead] = row;
        ++rank;
        break;
      }
      const auto& p = pivots[lead];
      for (std::size_t k = w; k < words; ++k) row[k] ^= p[k];
    }
  }
  return rank;
}

std::size_t rank_rationals(const SparseIntMatrix& m) {
  try {
    return detail::fraction_free_rank<std::int64_t>(m);
  } catch (const detail::Overflow&) {
    return detail::fraction_free_rank<boost::multiprecision::cpp_int>(m);
  }
}

}  // namespace connideals
