#include <algorithm>
#include <map>
#include <string>

#include "connideals/errors.hpp"
#include "connideals/ideal.hpp"

namespace connideals {

namespace {

using Key = std::vector<std::uint64_t>;

// The split at x is forced: xJ must carry exactly the generators containing
// x, so J = <u \ x : x in u> and K = <u : x not in u>. Both lists are
// antichains whenever the input is, which gives the disjoint-generator
// condition for free; K inside J still has to be checked.
class SplitSearch {
 public:
  explicit SplitSearch(const SearchLimits& limits) : limits_(limits) {}

  bool splittable(std::vector<VertexSet> gens) {
    if (gens.size() <= 1) return true;
    std::sort(gens.begin(), gens.end(), LexLess{});
    Key key;
    key.reserve(gens.size());
    for (VertexSet u : gens) key.push_back(u.bits());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool result = false;
    VertexSet support;
    for (VertexSet u : gens) support |= u;
    for (int x : support) {
      std::vector<VertexSet> with_x;
      std::vector<VertexSet> without_x;
      for (VertexSet u : gens) {
        if (u.contains(x)) {
          with_x.push_back(u.without(x));
        } else {
          without_x.push_back(u);
        }
      }
      const bool nested = std::all_of(without_x.begin(), without_x.end(), [&](VertexSet k) {
        return std::any_of(with_x.begin(), with_x.end(), [k](VertexSet j) { return j.subset_of(k); });
      });
      if (!nested) continue;
      if (splittable(std::move(with_x)) && splittable(std::move(without_x))) {
        result = true;
        break;
      }
    }
    memo_.emplace(std::move(key), result);
    if (memo_.size() > limits_.max_states) {
      throw ResourceLimit("vertex-splittable search exceeded " +
                          std::to_string(limits_.max_states) + " memo entries");
    }
    return result;
  }

 private:
  SearchLimits limits_;
  std::map<Key, bool> memo_;
};

}  // namespace

bool is_vertex_splittable(const SquarefreeIdeal& ideal, const SearchLimits& limits) {
  if (ideal.size() > limits.max_generators) {
    throw ResourceLimit("ideal has " + std::to_string(ideal.size()) +
                        " generators, above the cap of " +
                        std::to_string(limits.max_generators));
  }
  SplitSearch search(limits);
  return search.splittable(ideal.gens());
}

}  // namespace connideals
