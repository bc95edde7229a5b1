#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "connideals/vertex_set.hpp"

namespace connideals {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with bitmask adjacency rows.
///
/// Immutable once built. Disconnected graphs are ordinary inputs.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops or out-of-range endpoints;
  /// duplicate edges collapse.
  explicit Graph(int n, std::span<const Edge> edges = {});

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  VertexSet vertices() const { return VertexSet::first(vertex_count()); }
  VertexSet neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  int edge_count() const;
  /// Edges as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  /// N(C): vertices outside `c` adjacent to some member of `c`.
  VertexSet neighborhood(VertexSet c) const;
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adjacency_;
};

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph relabelled to i.
  std::vector<int> original;
};

/// "n m" header followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
/// One graph6 line (short form, n <= 62).
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, VertexSet c);

/// Whether G[c] is connected; `c` must be nonempty.
bool is_connected_set(const Graph& g, VertexSet c);
/// Vertex sets of the connected components of G[c], ordered by minimum.
std::vector<VertexSet> components(const Graph& g, VertexSet c);

/// All t-subsets inducing a connected subgraph, in lexicographic order.
std::vector<VertexSet> connected_t_subsets(const Graph& g, int t);

/// {v in c : c \ v connected}; `c` connected with |c| >= 2.
VertexSet non_cut_vertices(const Graph& g, VertexSet c);

/// Some edge (x, y) with x in a, y in b. `a` and `b` must be disjoint.
std::optional<Edge> bridge_edge(const Graph& g, VertexSet a, VertexSet b);

/// A perfect elimination order if `g` is chordal. Computed by maximum
/// cardinality search; each vertex is simplicial among those after it.
std::optional<std::vector<int>> is_chordal(const Graph& g);
/// Whether `order` is a permutation of the vertices in which every vertex is
/// simplicial in the subgraph induced by itself and its successors.
bool is_perfect_elimination_order(const Graph& g, std::span<const int> order);
/// Simplicial vertices of G[active] (neighbours inside `active` form a clique).
VertexSet simplicial_vertices(const Graph& g, VertexSet active);

/// No pair of disjoint edges without an edge between them.
bool is_gap_free(const Graph& g);
/// Two disjoint edges with no edge between them, if any.
std::optional<std::pair<Edge, Edge>> find_gap(const Graph& g);

/// No induced K_{1,t}; t >= 3.
bool is_t_claw_free(const Graph& g, int t);
/// Centre followed by t pairwise non-adjacent neighbours, if an induced
/// K_{1,t} exists.
std::optional<std::vector<int>> find_claw(const Graph& g, int t);

/// L(C): isolated vertices of G[c \ a]. `a` must lie in `c`, `c` connected.
VertexSet leaves_toward(const Graph& g, VertexSet c, int a);

/// Vertex set of some induced cycle with more than `bound` vertices.
std::optional<VertexSet> has_long_induced_cycle(const Graph& g, int bound);

}  // namespace connideals
