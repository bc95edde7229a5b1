#include "connideals/order_builders.hpp"

#include <algorithm>
#include <map>

#include "connideals/hypergraph.hpp"

namespace connideals {

std::vector<VertexSet> lex_subset_order(VertexSet universe, int k) {
  if (k < 0 || k > universe.size()) throw std::invalid_argument("lex_subset_order: k out of range");
  const std::vector<int> members = universe.to_vector();
  std::vector<VertexSet> out;
  // Increasing index tuples in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  const int n = universe.size();
  while (true) {
    VertexSet s;
    for (int i : pick) s.insert(members[static_cast<std::size_t>(i)]);
    out.push_back(s);
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) {
      pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return out;
}

VertexSet lex_exchange_witness(VertexSet later, VertexSet earlier) {
  if (later.size() != earlier.size() || !lex_less(earlier, later)) {
    throw std::invalid_argument("lex_exchange_witness: need earlier < later, same size");
  }
  const auto a = later.to_vector();
  const auto b = earlier.to_vector();
  std::size_t i = 0;
  while (a[i] == b[i]) ++i;
  return later.without(a[i]).with(b[i]);
}

namespace {

AdmissibleOrder certify(const SquarefreeIdeal& ideal, const std::vector<VertexSet>& sequence) {
  std::vector<std::size_t> order;
  order.reserve(sequence.size());
  for (VertexSet c : sequence) order.push_back(*ideal.index_of(c));
  auto cert = is_admissible(ideal, order);
  if (!cert) throw std::logic_error("order builder produced a non-admissible order");
  return *std::move(cert);
}

// t-connected sets of G[active] containing v, lexicographically.
std::vector<VertexSet> sets_through(const std::vector<VertexSet>& all, VertexSet active, int v) {
  std::vector<VertexSet> out;
  for (VertexSet c : all) {
    if (c.contains(v) && c.subset_of(active)) out.push_back(c);
  }
  return out;
}

}  // namespace

std::optional<AdmissibleOrder> chordal_order(const Graph& g, int t) {
  if (!is_chordal(g)) throw HypothesisViolation("chordal_order: graph is not chordal");
  std::vector<int> elimination;
  VertexSet active = g.vertices();
  while (!active.empty()) {
    const int v = simplicial_vertices(g, active).min();
    elimination.push_back(v);
    active.erase(v);
  }
  return chordal_order(g, t, elimination);
}

std::optional<AdmissibleOrder> chordal_order(const Graph& g, int t,
                                             std::span<const int> elimination) {
  if (!is_perfect_elimination_order(g, elimination)) {
    throw HypothesisViolation("chordal_order: not a perfect elimination order");
  }
  if (!is_t_gap_free(g, t)) return std::nullopt;
  const SquarefreeIdeal ideal = conn_ideal(g, t);
  const auto& all = ideal.gens();
  // Peeling v_1, v_2, ... means the block of v_1 comes last.
  std::vector<std::vector<VertexSet>> blocks;
  VertexSet active = g.vertices();
  for (int v : elimination) {
    blocks.push_back(sets_through(all, active, v));
    active.erase(v);
  }
  std::vector<VertexSet> sequence;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    sequence.insert(sequence.end(), it->begin(), it->end());
  }
  return certify(ideal, sequence);
}

namespace {

BranchDecomposition decompose(const Graph& g, VertexSet c, int a) {
  const VertexSet rest = c.without(a);
  BranchDecomposition out{a, {}, {}};
  for (int v : rest) {
    if (g.neighbors(v).intersects(rest)) {
      out.branch.insert(v);
    } else {
      out.leaves.insert(v);
    }
  }
  return out;
}

void require_gap_free(const Graph& g) {
  if (auto gap = find_gap(g)) {
    throw HypothesisViolation(
        "graph is not gap-free: edges {" + std::to_string(gap->first.first) + "," +
        std::to_string(gap->first.second) + "} and {" + std::to_string(gap->second.first) +
        "," + std::to_string(gap->second.second) + "} have no edge between them");
  }
}

}  // namespace

BranchDecomposition branch_decompose(const Graph& g, VertexSet c, int a) {
  if (!c.contains(a)) throw std::invalid_argument("branch_decompose: anchor not in set");
  if (!is_connected_set(g, c)) throw std::invalid_argument("branch_decompose: set not connected");
  require_gap_free(g);
  return decompose(g, c, a);
}

AdmissibleOrder gapfree_clawfree_order(const Graph& g, int t) {
  std::vector<int> anchors = g.vertices().to_vector();
  return gapfree_clawfree_order(g, t, anchors);
}

AdmissibleOrder gapfree_clawfree_order(const Graph& g, int t, std::span<const int> anchors) {
  if (t < 3) throw std::invalid_argument("gapfree_clawfree_order: t must be >= 3");
  require_gap_free(g);
  if (auto claw = find_claw(g, t)) {
    std::string where = "centre " + std::to_string(claw->front()) + ", leaves";
    for (std::size_t i = 1; i < claw->size(); ++i) where += " " + std::to_string((*claw)[i]);
    throw HypothesisViolation("graph has an induced K_{1," + std::to_string(t) + "}: " + where);
  }
  {
    std::vector<int> sorted(anchors.begin(), anchors.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.vertices().to_vector()) {
      throw std::invalid_argument("gapfree_clawfree_order: anchors must permute the vertices");
    }
  }

  const SquarefreeIdeal ideal = conn_ideal(g, t);
  const auto& all = ideal.gens();
  std::vector<std::vector<VertexSet>> blocks;
  VertexSet active = g.vertices();
  for (int a : anchors) {
    // Strata by |L(C)|; inside a stratum, by branch and then by L(C).
    // L(C) and B(C) depend only on G[C], so the active subgraph is irrelevant.
    std::map<int, std::vector<std::pair<BranchDecomposition, VertexSet>>> strata;
    for (VertexSet c : sets_through(all, active, a)) {
      const BranchDecomposition d = decompose(g, c, a);
      strata[d.leaves.size()].emplace_back(d, c);
    }
    std::vector<VertexSet> block;
    for (auto& [k, members] : strata) {
      std::stable_sort(members.begin(), members.end(), [k = k](const auto& x, const auto& y) {
        if (k == 0) return lex_less(x.second, y.second);
        if (x.first.branch != y.first.branch) return lex_less(x.first.branch, y.first.branch);
        return lex_less(x.first.leaves, y.first.leaves);
      });
      for (const auto& member : members) block.push_back(member.second);
    }
    blocks.push_back(std::move(block));
    active.erase(a);
  }
  std::vector<VertexSet> sequence;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    sequence.insert(sequence.end(), it->begin(), it->end());
  }
  return certify(ideal, sequence);
}

}  // namespace connideals
