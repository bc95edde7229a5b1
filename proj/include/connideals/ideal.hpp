#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "connideals/graph.hpp"

namespace connideals {

/// Square-free monomial ideal, stored by the supports of its minimal
/// generators. No coefficient field is attached: everything decided here
/// (colons, linear quotients, vertex splittings) is field independent.
///
/// Generators are kept as a lexicographically sorted antichain; the empty
/// generator list is the zero ideal.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal() = default;
  /// Throws std::invalid_argument unless `gens` is an antichain over
  /// {0..ground-1}. Order and duplicates are normalised.
  SquarefreeIdeal(int ground, std::vector<VertexSet> gens);

  int ground() const { return ground_; }
  const std::vector<VertexSet>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  /// Common generator degree, or nullopt for the zero ideal and for mixed
  /// degrees.
  std::optional<int> generating_degree() const;
  /// Union of all supports.
  VertexSet support() const;
  /// Whether the monomial with support `s` lies in the ideal.
  bool contains(VertexSet s) const;
  /// Index of `s` among the minimal generators, if it is one.
  std::optional<std::size_t> index_of(VertexSet s) const;

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  int ground_ = 0;
  std::vector<VertexSet> gens_;
};

/// lcm(u, v) / v for square-free monomials: the set difference u \ v.
constexpr VertexSet colon(VertexSet u, VertexSet v) { return u - v; }

/// Drops every support containing another one (and duplicates).
SquarefreeIdeal minimalize(int ground, std::vector<VertexSet> gens);

/// conn_t(G): generated by x_C for the t-connected sets C.
SquarefreeIdeal conn_ideal(const Graph& g, int t);
/// Generated by the vertex sets of simple paths on t vertices (paths as
/// subgraphs, not necessarily induced).
SquarefreeIdeal path_ideal(const Graph& g, int t);

/// An ordering of the minimal generators with a witness table proving that
/// every colon <u_1..u_{i-1}> : u_i is generated by variables.
struct AdmissibleOrder {
  /// order[p] is the generator index placed at position p.
  std::vector<std::size_t> order;
  /// witness[p][q] for q < p is a position k < p such that u_k : u_p is a
  /// single variable dividing u_q : u_p. witness[0] is empty.
  std::vector<std::vector<std::size_t>> witness;
};

/// Checks `order` and builds its certificate. Throws std::invalid_argument if
/// `order` is not a permutation of the generator indices.
std::optional<AdmissibleOrder> is_admissible(const SquarefreeIdeal& ideal,
                                             std::span<const std::size_t> order);

/// Re-checks a certificate without searching for witnesses.
bool replay_certificate(const SquarefreeIdeal& ideal, const AdmissibleOrder& cert);

struct SearchLimits {
  std::size_t max_generators = 128;
  std::size_t max_states = std::size_t{1} << 22;
};

/// Exact linear-quotients decision. Returns an admissible order iff one
/// exists; throws ResourceLimit when `limits` are exceeded.
std::optional<AdmissibleOrder> find_admissible_order(const SquarefreeIdeal& ideal,
                                                     const SearchLimits& limits = {});

/// Exact recursive vertex-splittability decision, memoised on generator sets.
/// Throws ResourceLimit when `limits` are exceeded.
bool is_vertex_splittable(const SquarefreeIdeal& ideal, const SearchLimits& limits = {});

}  // namespace connideals
