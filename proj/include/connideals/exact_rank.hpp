#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace connideals {

/// Integer matrix in row-major sparse form; each row lists (column, value)
/// with strictly increasing columns and nonzero values.
struct SparseIntMatrix {
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> rows;
};

/// Rank over GF(2), bit-packed row reduction.
std::size_t rank_gf2(const SparseIntMatrix& m);

/// Rank over the rationals. Exact: fraction-free elimination in int64 with
/// overflow detection, redone in arbitrary precision if int64 overflows.
std::size_t rank_rationals(const SparseIntMatrix& m);

namespace detail {

struct Overflow {};

template <class Scalar>
struct Arith {
  static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  static Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
  static Scalar gcd(const Scalar& a, const Scalar& b) {
    return boost::multiprecision::gcd(a, b);
  }
  static Scalar abs(const Scalar& a) { return a < 0 ? Scalar(-a) : a; }
};

template <>
struct Arith<std::int64_t> {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
  static std::int64_t abs(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
  }
};

/// Row echelon reduction keyed by leading column. Each incoming row is
/// cleared against existing pivots with integer combinations
/// (pivot_lead * row - row_lead * pivot) and divided by its content, so no
/// fractions arise.
template <class Scalar>
std::size_t fraction_free_rank(const SparseIntMatrix& m) {
  using A = Arith<Scalar>;
  using Row = std::vector<std::pair<int, Scalar>>;
  std::map<int, Row> pivots;
  for (const auto& input : m.rows) {
    Row row;
    row.reserve(input.size());
    for (auto [c, v] : input) {
      if (v != 0) row.emplace_back(c, Scalar(v));
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const Row& pivot = it->second;
      const Scalar g = A::gcd(A::abs(pivot.front().second), A::abs(row.front().second));
      const Scalar fr = pivot.front().second / g;
      const Scalar fp = row.front().second / g;
      Row merged;
      merged.reserve(row.size() + pivot.size());
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
          merged.emplace_back(row[i].first, A::mul(fr, row[i].second));
          ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
          merged.emplace_back(pivot[j].first, A::sub(Scalar(0), A::mul(fp, pivot[j].second)));
          ++j;
        } else {
          Scalar v = A::sub(A::mul(fr, row[i].second), A::mul(fp, pivot[j].second));
          if (v != 0) merged.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      Scalar content(0);
      for (const auto& e : merged) content = A::gcd(content, A::abs(e.second));
      if (content > 1) {
        for (auto& e : merged) e.second /= content;
      }
      row = std::move(merged);
    }
  }
  return pivots.size();
}

}  // namespace detail

}  // namespace connideals
