#include "connideals/hypergraph.hpp"

#include <stdexcept>

namespace connideals {

Hypergraph build_hypergraph(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("build_hypergraph: t must be >= 2");
  return Hypergraph{g.vertex_count(), t, connected_t_subsets(g, t)};
}

namespace {

struct MatchingSearch {
  const Hypergraph& h;
  int best = 0;

  // Hyperedges inside `cover` other than the chosen ones.
  bool stays_induced(VertexSet cover, int chosen_count) const {
    int inside = 0;
    for (VertexSet e : h.edges) {
      if (e.subset_of(cover) && ++inside > chosen_count) return false;
    }
    return true;
  }

  void run(std::size_t next, VertexSet cover, int chosen) {
    if (chosen > best) best = chosen;
    const int free_vertices = h.ground - cover.size();
    if (chosen + free_vertices / h.rank <= best) return;
    for (std::size_t i = next; i < h.edges.size(); ++i) {
      const VertexSet e = h.edges[i];
      if (e.intersects(cover)) continue;
      // Induced matchings are closed under taking subfamilies, so pruning a
      // non-induced partial family loses nothing.
      if (!stays_induced(cover | e, chosen + 1)) continue;
      run(i + 1, cover | e, chosen + 1);
    }
  }
};

}  // namespace

int induced_matching_number(const Hypergraph& h) {
  if (h.edges.empty()) return 0;
  MatchingSearch search{h};
  search.run(0, VertexSet{}, 0);
  return search.best;
}

bool is_t_gap_free(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("is_t_gap_free: t must be >= 2");
  const auto sets = connected_t_subsets(g, t);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const VertexSet reach = g.neighborhood(sets[i]);
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!sets[i].intersects(sets[j]) && !reach.intersects(sets[j])) return false;
    }
  }
  return true;
}

}  // namespace connideals
