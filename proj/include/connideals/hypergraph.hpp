#pragma once

#include <vector>

#include "connideals/graph.hpp"

namespace connideals {

/// Uniform hypergraph: every hyperedge has the same nonzero cardinality.
struct Hypergraph {
  int ground = 0;
  int rank = 0;
  std::vector<VertexSet> edges;  // distinct, lexicographic
};

/// H(G, t): hyperedges are the t-connected sets of g. Requires t >= 2.
Hypergraph build_hypergraph(const Graph& g, int t);

/// Size of the largest induced matching: pairwise disjoint hyperedges whose
/// union contains no further hyperedge. 0 for the empty hypergraph.
int induced_matching_number(const Hypergraph& h);

/// Every two disjoint t-connected sets are joined by an edge. Graphs without
/// any t-connected set count as t-gap-free.
bool is_t_gap_free(const Graph& g, int t);

}  // namespace connideals
