#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "connideals/graph.hpp"
#include "connideals/ideal.hpp"

namespace connideals {

/// All k-subsets of `universe` in lexicographic order. With this order,
/// whenever C' < C some C'' < C satisfies C'' \ C = {x} with x in C'.
std::vector<VertexSet> lex_subset_order(VertexSet universe, int k);

/// The C'' promised above for C' < C (equal-size sets, compared
/// lexicographically): C with its first differing element replaced by the
/// corresponding element of C'.
VertexSet lex_exchange_witness(VertexSet later, VertexSet earlier);

/// Builder input that violates the theorem hypotheses it relies on.
class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Admissible order of conn_t(g) for a chordal t-gap-free g, built by peeling
/// simplicial vertices: order(G) = order(G \ v) followed by the t-connected
/// sets through v (lexicographically). Uses the smallest simplicial vertex at
/// each step. Returns nullopt when g is not t-gap-free (no admissible order
/// exists then). Throws HypothesisViolation if g is not chordal.
std::optional<AdmissibleOrder> chordal_order(const Graph& g, int t);
/// Same, peeling vertices in the given order, which must be a perfect
/// elimination order of g.
std::optional<AdmissibleOrder> chordal_order(const Graph& g, int t,
                                             std::span<const int> elimination);

/// Anchor a, the leaves L(C) of G[C] hanging on a, and the branch
/// B(C) = C \ ({a} | L(C)).
struct BranchDecomposition {
  int anchor = -1;
  VertexSet leaves;
  VertexSet branch;
};

/// Requires a in c, c connected and g gap-free.
BranchDecomposition branch_decompose(const Graph& g, VertexSet c, int a);

/// Admissible order of conn_t(g) for gap-free, t-claw-free g (t >= 3).
///
/// Removes anchors one at a time (smallest remaining vertex by default) and
/// appends the t-connected sets through the anchor a grouped by k = |L(C)|:
/// k = 0 first, lexicographically; then for each k >= 1, grouped by branch
/// (branches lexicographically), and within a branch by L(C) in
/// lexicographic order. Throws HypothesisViolation naming a gap or claw.
AdmissibleOrder gapfree_clawfree_order(const Graph& g, int t);
/// Same, with an explicit anchor sequence (a permutation of the vertices;
/// anchors[0] is removed first).
AdmissibleOrder gapfree_clawfree_order(const Graph& g, int t, std::span<const int> anchors);

}  // namespace connideals
