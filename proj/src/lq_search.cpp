// Exact decision procedure for linear quotients of square-free ideals.
//
// Whether a generator u may follow an admissible prefix depends only on the
// set of generators already placed, so the search runs over prefix sets and
// memoises the ones known not to extend to a full order. Three sound
// shortcuts run before (or between) exhaustive phases:
//
//  * pair test: an admissible order puts one of u, v first, say u, and then
//    needs some w inside u | v with |w \ v| = 1. If neither direction has
//    such a w there is no admissible order at all;
//  * a budgeted depth-first pass, whose first descent is the greedy order;
//  * resolution: linear quotients force a linear resolution over every
//    field, so an equigenerated I_W without one over GF(2) is refuted;
//  * restriction: an admissible order restricts to one of I_W (generators
//    supported in W) for every W, so a failing vertex deletion refutes I.

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "connideals/betti.hpp"
#include "connideals/errors.hpp"
#include "connideals/ideal.hpp"
#include "index_set.hpp"

namespace connideals {

namespace {

using detail::IndexSet;
using detail::IndexSetHash;

constexpr std::size_t kGreedyBudget = 20000;

class PrefixSearch {
 public:
  PrefixSearch(const std::vector<VertexSet>& gens, const SearchLimits& limits)
      : gens_(gens), m_(gens.size()), limits_(limits), colon_(m_ * m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) colon_[i * m_ + j] = colon(gens_[j], gens_[i]);
    }
  }

  enum class Outcome { found, exhausted, out_of_budget };

  // Runs until a full order is found, the space is exhausted, or `budget`
  // node expansions have been spent. Dead prefix sets persist across calls.
  Outcome run(std::size_t budget) {
    budget_ = budget;
    sequence_.clear();
    IndexSet placed(m_);
    switch (dfs(placed)) {
      case Step::found:
        return Outcome::found;
      case Step::dead:
        return Outcome::exhausted;
      case Step::budget:
        break;
    }
    return Outcome::out_of_budget;
  }

  const std::vector<std::size_t>& sequence() const { return sequence_; }

 private:
  enum class Step { found, dead, budget };

  // colon(u_j, u_i)
  VertexSet col(std::size_t j, std::size_t i) const { return colon_[i * m_ + j]; }

  bool can_follow(std::size_t i) const {
    VertexSet vars;
    for (std::size_t k : sequence_) {
      const VertexSet c = col(k, i);
      if (c.size() == 1) vars |= c;
    }
    return std::all_of(sequence_.begin(), sequence_.end(),
                       [&](std::size_t j) { return col(j, i).intersects(vars); });
  }

  Step dfs(IndexSet& placed) {
    if (sequence_.size() == m_) return Step::found;
    if (dead_.contains(placed)) return Step::dead;
    if (budget_ == 0) return Step::budget;
    --budget_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (placed.test(i) || !can_follow(i)) continue;
      placed.set(i);
      sequence_.push_back(i);
      const Step step = dfs(placed);
      if (step != Step::dead) return step;
      sequence_.pop_back();
      placed.reset(i);
    }
    dead_.insert(placed);
    if (dead_.size() > limits_.max_states) {
      throw ResourceLimit("linear-quotients search exceeded " +
                          std::to_string(limits_.max_states) + " memo entries");
    }
    return Step::dead;
  }

  const std::vector<VertexSet>& gens_;
  std::size_t m_;
  SearchLimits limits_;
  std::vector<VertexSet> colon_;
  std::vector<std::size_t> sequence_;
  std::unordered_set<IndexSet, IndexSetHash> dead_;
  std::size_t budget_ = 0;
};

bool pair_obstructed(const std::vector<VertexSet>& gens) {
  auto one_way = [&](VertexSet u, VertexSet v) {
    // Can u come before v?  Needs w in u | v with w \ v a single variable.
    const VertexSet both = u | v;
    return std::any_of(gens.begin(), gens.end(), [&](VertexSet w) {
      return w.subset_of(both) && colon(w, v).size() == 1;
    });
  };
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (!one_way(gens[a], gens[b]) && !one_way(gens[b], gens[a])) return true;
    }
  }
  return false;
}

class LinearQuotientsDecider {
 public:
  LinearQuotientsDecider(const SquarefreeIdeal& ideal, const SearchLimits& limits)
      : ideal_(ideal), limits_(limits) {}

  // Decides I_W; the order, when found, indexes `restricted(w)`.
  std::optional<std::vector<std::size_t>> decide(VertexSet w) {
    const auto gens = restricted(w);
    if (gens.size() <= 1) return identity(gens.size());
    if (pair_obstructed(gens)) return std::nullopt;

    PrefixSearch search(gens, limits_);
    auto outcome = search.run(kGreedyBudget);
    if (outcome == PrefixSearch::Outcome::found) return search.sequence();
    if (outcome == PrefixSearch::Outcome::exhausted) return std::nullopt;
    if (!linear_over_gf2(gens)) return std::nullopt;

    for (int v : w) {
      const VertexSet smaller = w.without(v);
      if (restricted(smaller).size() == gens.size()) continue;
      if (!decided(smaller)) return std::nullopt;
    }
    outcome = search.run(static_cast<std::size_t>(-1));
    if (outcome == PrefixSearch::Outcome::found) return search.sequence();
    return std::nullopt;
  }

 private:
  std::vector<VertexSet> restricted(VertexSet w) const {
    std::vector<VertexSet> out;
    for (VertexSet u : ideal_.gens()) {
      if (u.subset_of(w)) out.push_back(u);
    }
    return out;
  }

  bool linear_over_gf2(const std::vector<VertexSet>& gens) const {
    const SquarefreeIdeal sub(ideal_.ground(), gens);
    if (!sub.generating_degree()) return true;
    try {
      return has_linear_resolution(sub, Field::gf2);
    } catch (const ResourceLimit&) {
      return true;
    }
  }

  static std::vector<std::size_t> identity(std::size_t m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m; ++i) out.push_back(i);
    return out;
  }

  bool decided(VertexSet w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    const bool result = decide(w).has_value();
    memo_.emplace(w, result);
    return result;
  }

  const SquarefreeIdeal& ideal_;
  SearchLimits limits_;
  std::unordered_map<VertexSet, bool, VertexSetHash> memo_;
};

}  // namespace

std::optional<AdmissibleOrder> find_admissible_order(const SquarefreeIdeal& ideal,
                                                     const SearchLimits& limits) {
  if (ideal.size() > limits.max_generators) {
    throw ResourceLimit("ideal has " + std::to_string(ideal.size()) +
                        " generators, above the cap of " +
                        std::to_string(limits.max_generators));
  }
  LinearQuotientsDecider decider(ideal, limits);
  const auto order = decider.decide(ideal.support());
  if (!order) return std::nullopt;
  auto cert = is_admissible(ideal, *order);
  if (!cert) throw std::logic_error("linear-quotients search produced an invalid order");
  return cert;
}

}  // namespace connideals
