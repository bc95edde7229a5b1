#include "connideals/betti.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "connideals/errors.hpp"

namespace connideals {

int BettiTable::regularity() const {
  if (entries.empty()) throw std::invalid_argument("regularity of an empty Betti table");
  int reg = entries.begin()->first.second - entries.begin()->first.first;
  for (const auto& [key, rank] : entries) reg = std::max(reg, key.second - key.first);
  return reg;
}

BettiTable betti_table(const SquarefreeIdeal& ideal, Field field, const BettiLimits& limits) {
  const int n = ideal.ground();
  if (n > limits.max_ground) {
    throw ResourceLimit("betti_table: " + std::to_string(n) + " variables exceed the cap of " +
                        std::to_string(limits.max_ground));
  }
  const auto& gens = ideal.gens();
  if (std::any_of(gens.begin(), gens.end(), [](VertexSet u) { return u.empty(); })) {
    throw std::invalid_argument("betti_table: unit ideal");
  }
  BettiTable table;
  table.field = field;
  if (gens.empty()) return table;

  const std::size_t total = std::size_t{1} << n;
  std::vector<bool> is_face(total);
  for (std::size_t s = 0; s < total; ++s) is_face[s] = !ideal.contains(VertexSet::from_bits(s));

  std::vector<VertexSet> faces;
  for (std::size_t w = 1; w < total; ++w) {
    const VertexSet window = VertexSet::from_bits(w);
    VertexSet covered;
    for (VertexSet u : gens) {
      if (u.subset_of(window)) covered |= u;
    }
    if (covered != window) continue;  // cone point

    faces.clear();
    std::uint64_t sub = w;
    while (true) {
      if (is_face[sub]) faces.push_back(VertexSet::from_bits(sub));
      if (sub == 0) break;
      sub = (sub - 1) & w;
    }
    const auto ranks = homology_of_faces(faces, field);
    const int j = window.size();
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      if (ranks[k] == 0) continue;
      const int d = static_cast<int>(k) - 1;
      const int i = j - d - 2;
      if (i >= 0) table.entries[{i, j}] += ranks[k];
    }
  }
  return table;
}

int regularity(const SquarefreeIdeal& ideal, Field field, const BettiLimits& limits) {
  if (ideal.is_zero()) throw std::invalid_argument("regularity: zero ideal");
  return betti_table(ideal, field, limits).regularity();
}

bool has_linear_resolution(const SquarefreeIdeal& ideal, Field field, const BettiLimits& limits) {
  if (ideal.is_zero()) return true;
  const auto degree = ideal.generating_degree();
  if (!degree) throw std::invalid_argument("has_linear_resolution: ideal is not equigenerated");
  return regularity(ideal, field, limits) == *degree;
}

int cycle_regularity_formula(int n, int t) {
  if (n < 3 || t < 2 || t > n) {
    throw std::invalid_argument("cycle_regularity_formula: need n >= 3 and 2 <= t <= n");
  }
  const int p = n / (t + 1);
  const int d = n % (t + 1);
  return d != 0 ? (t - 1) * p + d - 1 : (t - 1) * p;
}

}  // namespace connideals
