#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "connideals/graph.hpp"
#include "connideals/ideal.hpp"

namespace connideals {

/// Coefficient field for homology and Betti numbers.
enum class Field { rationals, gf2 };

std::string_view to_string(Field f);
/// "q" / "Q" / "rationals" and "gf2" / "GF2" / "2".
Field parse_field(std::string_view name);

/// Simplicial complex on {0..ground-1} given by its facets.
///
/// The void complex has no facets at all; the irrelevant complex has the
/// single facet {} (only the empty face). Both are valid and distinct.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Facets are reduced to an antichain.
  SimplicialComplex(int ground, std::vector<VertexSet> facets);

  int ground() const { return ground_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }
  bool is_simplex() const {
    return facets_.size() == 1 && facets_.front() == VertexSet::first(ground_);
  }
  bool is_pure() const;
  bool has_face(VertexSet s) const;
  /// Largest facet size minus one; -1 for the irrelevant complex, and also
  /// for the void complex (which has no faces).
  int dimension() const;
  /// Every face, grouped by size and sorted lexicographically within a size.
  std::vector<VertexSet> faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int ground_ = 0;
  std::vector<VertexSet> facets_;
};

/// Ind_r(G): sets whose induced components all have at most r vertices.
SimplicialComplex independence_complex(const Graph& g, int r);

/// Minimal non-faces.
SquarefreeIdeal stanley_reisner(const SimplicialComplex& complex);
/// The complex whose faces are the sets containing no generator.
SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal);

/// Facets are the complements of the minimal non-faces. Throws
/// std::invalid_argument for the void complex and the full simplex.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

/// Shelling test for a pure complex; `order` permutes the facet indices.
bool is_shelling(const SimplicialComplex& complex, std::span<const std::size_t> order);

/// Reduced homology ranks, entry d+1 holding dim H~_d for d = -1..dim.
/// Empty for the void complex.
std::vector<std::size_t> homology_ranks(const SimplicialComplex& complex, Field field);

/// Same, for the complex whose faces are exactly `faces` (closed under
/// subsets, containing {} unless empty).
std::vector<std::size_t> homology_of_faces(std::span<const VertexSet> faces, Field field);

}  // namespace connideals
