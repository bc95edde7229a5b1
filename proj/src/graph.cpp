#include "connideals/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace connideals {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0 || n > VertexSet::kCapacity) {
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " unsupported (limit 64)");
  }
  adjacency_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].insert(v);
    adjacency_[static_cast<std::size_t>(v)].insert(u);
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : adjacency_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::neighborhood(VertexSet c) const {
  VertexSet out;
  for (int v : c) out |= neighbors(v);
  return out - c;
}

Graph Graph::complement() const {
  std::vector<Edge> missing;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v = u + 1; v < vertex_count(); ++v) {
      if (!adjacent(u, v)) missing.emplace_back(u, v);
    }
  }
  return Graph(vertex_count(), missing);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet c) {
  InducedSubgraph out;
  out.original = c.to_vector();
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    index[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (c.contains(u) && c.contains(v)) {
      edges.emplace_back(index[static_cast<std::size_t>(u)],
                         index[static_cast<std::size_t>(v)]);
    }
  }
  out.graph = Graph(c.size(), edges);
  return out;
}

namespace {

// Vertices of c reachable from `seed` inside G[c].
VertexSet reach(const Graph& g, VertexSet c, int seed) {
  VertexSet seen = VertexSet::singleton(seed);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= c;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_connected_set(const Graph& g, VertexSet c) {
  if (c.empty()) throw std::invalid_argument("is_connected_set: empty vertex set");
  return reach(g, c, c.min()) == c;
}

std::vector<VertexSet> components(const Graph& g, VertexSet c) {
  std::vector<VertexSet> out;
  while (!c.empty()) {
    VertexSet part = reach(g, c, c.min());
    out.push_back(part);
    c -= part;
  }
  return out;
}

std::vector<VertexSet> connected_t_subsets(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("connected_t_subsets: t must be positive");
  std::vector<VertexSet> out;
  const int n = g.vertex_count();
  if (t > n) return out;

  // Extension-set enumeration: each connected set is reached exactly once,
  // from its minimum vertex, without ever touching disconnected candidates.
  std::function<void(VertexSet, VertexSet, VertexSet)> grow =
      [&](VertexSet current, VertexSet extension, VertexSet allowed) {
        if (current.size() == t) {
          out.push_back(current);
          return;
        }
        const VertexSet closed = current | g.neighborhood(current);
        while (!extension.empty()) {
          const int w = extension.min();
          extension.erase(w);
          const VertexSet exclusive = (g.neighbors(w) & allowed) - closed;
          grow(current.with(w), extension | exclusive, allowed);
        }
      };
  for (int seed = 0; seed < n; ++seed) {
    const VertexSet allowed = g.vertices() - VertexSet::first(seed + 1);
    grow(VertexSet::singleton(seed), g.neighbors(seed) & allowed, allowed);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

VertexSet non_cut_vertices(const Graph& g, VertexSet c) {
  if (c.size() < 2 || !is_connected_set(g, c)) {
    throw std::invalid_argument("non_cut_vertices: need a connected set of size >= 2");
  }
  VertexSet out;
  for (int v : c) {
    if (is_connected_set(g, c.without(v))) out.insert(v);
  }
  return out;
}

std::optional<Edge> bridge_edge(const Graph& g, VertexSet a, VertexSet b) {
  if (a.intersects(b)) throw std::invalid_argument("bridge_edge: sets overlap");
  for (int x : a) {
    const VertexSet hit = g.neighbors(x) & b;
    if (!hit.empty()) return Edge{x, hit.min()};
  }
  return std::nullopt;
}

VertexSet simplicial_vertices(const Graph& g, VertexSet active) {
  VertexSet out;
  for (int v : active) {
    const VertexSet nb = g.neighbors(v) & active;
    bool clique = true;
    for (int w : nb) {
      if (!(nb.without(w)).subset_of(g.neighbors(w))) {
        clique = false;
        break;
      }
    }
    if (clique) out.insert(v);
  }
  return out;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const int> order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  VertexSet remaining = g.vertices();
  for (int v : order) {
    if (!remaining.contains(v)) return false;
    const VertexSet later = g.neighbors(v) & remaining;
    for (int w : later) {
      if (!later.without(w).subset_of(g.neighbors(w))) return false;
    }
    remaining.erase(v);
  }
  return true;
}

std::optional<std::vector<int>> is_chordal(const Graph& g) {
  const int n = g.vertex_count();
  // Maximum cardinality search numbers vertices n-1 down to 0; the reverse of
  // the visiting sequence is a perfect elimination order iff g is chordal.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    int best = unvisited.min();
    for (int v : unvisited) {
      if (weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
    }
    visit.push_back(best);
    unvisited.erase(best);
    for (int w : g.neighbors(best) & unvisited) ++weight[static_cast<std::size_t>(w)];
  }
  std::reverse(visit.begin(), visit.end());
  if (!is_perfect_elimination_order(g, visit)) return std::nullopt;
  return visit;
}

std::optional<std::pair<Edge, Edge>> find_gap(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const VertexSet e1{edges[i].first, edges[i].second};
    const VertexSet reach1 = g.neighbors(edges[i].first) | g.neighbors(edges[i].second);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const VertexSet e2{edges[j].first, edges[j].second};
      if (e1.intersects(e2) || reach1.intersects(e2)) continue;
      return std::pair{edges[i], edges[j]};
    }
  }
  return std::nullopt;
}

bool is_gap_free(const Graph& g) { return !find_gap(g).has_value(); }

namespace {

// Some independent set of size `need` inside `pool`, built from `chosen`.
bool independent_extend(const Graph& g, VertexSet pool, int need, std::vector<int>& chosen) {
  if (need == 0) return true;
  if (pool.size() < need) return false;
  while (pool.size() >= need) {
    const int v = pool.min();
    pool.erase(v);
    chosen.push_back(v);
    if (independent_extend(g, pool - g.neighbors(v), need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_claw(const Graph& g, int t) {
  if (t < 3) throw std::invalid_argument("t-claw-freeness needs t >= 3");
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> claw{v};
    if (independent_extend(g, g.neighbors(v), t, claw)) return claw;
  }
  return std::nullopt;
}

bool is_t_claw_free(const Graph& g, int t) { return !find_claw(g, t).has_value(); }

VertexSet leaves_toward(const Graph& g, VertexSet c, int a) {
  if (!c.contains(a)) throw std::invalid_argument("leaves_toward: anchor not in set");
  if (!is_connected_set(g, c)) throw std::invalid_argument("leaves_toward: set not connected");
  const VertexSet rest = c.without(a);
  VertexSet out;
  for (int v : rest) {
    if (!g.neighbors(v).intersects(rest)) out.insert(v);
  }
  return out;
}

std::optional<VertexSet> has_long_induced_cycle(const Graph& g, int bound) {
  if (bound < 3) throw std::invalid_argument("has_long_induced_cycle: bound must be >= 3");
  std::optional<VertexSet> found;
  // Induced paths start..last whose members exceed `start`; a path closes
  // into an induced cycle when the new vertex also touches `start`.
  std::function<void(int, std::vector<int>&, VertexSet)> extend =
      [&](int start, std::vector<int>& path, VertexSet inner_block) {
        if (found) return;
        const int last = path.back();
        const VertexSet on_path = [&] {
          VertexSet s;
          for (int v : path) s.insert(v);
          return s;
        }();
        for (int w : g.neighbors(last)) {
          if (w <= start || on_path.contains(w) || g.neighbors(w).intersects(inner_block)) continue;
          if (g.adjacent(w, start)) {
            if (path.size() >= 2 && static_cast<int>(path.size()) + 1 > bound) {
              found = on_path.with(w);
              return;
            }
            continue;
          }
          path.push_back(w);
          // Everything except the new endpoint and the start is now interior.
          extend(start, path, inner_block.with(last));
          path.pop_back();
          if (found) return;
        }
      };
  for (int s = 0; s < g.vertex_count() && !found; ++s) {
    for (int first : g.neighbors(s)) {
      if (first <= s) continue;
      std::vector<int> path{s, first};
      extend(s, path, VertexSet{});
      if (found) break;
    }
  }
  return found;
}

}  // namespace connideals
