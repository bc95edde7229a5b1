#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "connideals/complex.hpp"
#include "connideals/ideal.hpp"

namespace connideals {

/// Graded Betti numbers beta_{i,j}(I) of the ideal (not of S/I), nonzero
/// entries only.
struct BettiTable {
  Field field = Field::rationals;
  std::map<std::pair<int, int>, std::size_t> entries;

  std::size_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  bool empty() const { return entries.empty(); }
  /// max{j - i}; the table must be nonempty.
  int regularity() const;
};

struct BettiLimits {
  int max_ground = 16;
};

/// Hochster's formula over the Stanley-Reisner complex D of the ideal:
/// beta_{i,j}(I) = sum over j-subsets W of dim H~_{j-i-2}(D[W]).
/// Restrictions with a cone point (a vertex of W lying in no generator
/// inside W) are acyclic and skipped. Throws ResourceLimit above
/// `limits.max_ground` variables and std::invalid_argument for the unit ideal.
BettiTable betti_table(const SquarefreeIdeal& ideal, Field field, const BettiLimits& limits = {});

/// reg(I). Refuses the zero ideal.
int regularity(const SquarefreeIdeal& ideal, Field field, const BettiLimits& limits = {});

/// True for the zero ideal; otherwise reg(I) equals the generating degree.
/// Throws std::invalid_argument for ideals with mixed generator degrees.
bool has_linear_resolution(const SquarefreeIdeal& ideal, Field field,
                           const BettiLimits& limits = {});

/// reg(S / conn_t(C_n)) from the closed form: with n = p(t+1) + d,
/// (t-1)p + d - 1 if d != 0 and (t-1)p if d = 0. Requires n >= 3,
/// 2 <= t <= n.
int cycle_regularity_formula(int n, int t);

}  // namespace connideals
