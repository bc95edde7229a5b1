#include "connideals/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "connideals/errors.hpp"
#include "connideals/exact_rank.hpp"

namespace connideals {

namespace {

// Operations below walk all 2^ground subsets.
constexpr int kMaxEnumerationGround = 24;

void require_enumerable(int ground, const char* what) {
  if (ground > kMaxEnumerationGround) {
    throw ResourceLimit(std::string(what) + ": ground set of " + std::to_string(ground) +
                        " vertices exceeds the enumeration limit of " +
                        std::to_string(kMaxEnumerationGround));
  }
}

// is_face[s] for every subset s of {0..n-1}.
std::vector<bool> face_table(const SimplicialComplex& complex) {
  const int n = complex.ground();
  require_enumerable(n, "face table");
  const std::size_t total = std::size_t{1} << n;
  std::vector<bool> is_face(total, false);
  for (VertexSet f : complex.facets()) is_face[f.bits()] = true;
  for (std::size_t s = total; s-- > 0;) {
    if (is_face[s]) continue;
    for (int v = 0; v < n; ++v) {
      const std::size_t up = s | (std::size_t{1} << v);
      if (up != s && is_face[up]) {
        is_face[s] = true;
        break;
      }
    }
  }
  return is_face;
}

}  // namespace

std::string_view to_string(Field f) { return f == Field::rationals ? "q" : "gf2"; }

Field parse_field(std::string_view name) {
  if (name == "q" || name == "Q" || name == "rationals") return Field::rationals;
  if (name == "gf2" || name == "GF2" || name == "2") return Field::gf2;
  throw std::invalid_argument("unknown field \"" + std::string(name) + "\"");
}

SimplicialComplex::SimplicialComplex(int ground, std::vector<VertexSet> facets)
    : ground_(ground) {
  if (ground < 0 || ground > VertexSet::kCapacity) {
    throw std::invalid_argument("complex ground set size unsupported");
  }
  const VertexSet universe = VertexSet::first(ground);
  std::sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : lex_less(a, b);
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (VertexSet f : facets) {
    if (!f.subset_of(universe)) throw std::invalid_argument("facet outside ground set");
    const bool covered = std::any_of(facets_.begin(), facets_.end(),
                                     [f](VertexSet kept) { return f.subset_of(kept); });
    if (!covered) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end(), LexLess{});
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::has_face(VertexSet s) const {
  return std::any_of(facets_.begin(), facets_.end(), [s](VertexSet f) { return s.subset_of(f); });
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (VertexSet f : facets_) {
    // All submasks of f, including f and {}.
    std::uint64_t sub = f.bits();
    while (true) {
      seen.insert(VertexSet::from_bits(sub));
      if (sub == 0) break;
      sub = (sub - 1) & f.bits();
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  });
  return out;
}

SimplicialComplex independence_complex(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("independence_complex: r must be positive");
  const int n = g.vertex_count();
  require_enumerable(n, "independence_complex");
  const std::size_t total = std::size_t{1} << n;
  std::vector<bool> is_face(total);
  for (std::size_t s = 0; s < total; ++s) {
    const auto parts = components(g, VertexSet::from_bits(s));
    is_face[s] = std::all_of(parts.begin(), parts.end(), [r](VertexSet p) { return p.size() <= r; });
  }
  std::vector<VertexSet> facets;
  for (std::size_t s = 0; s < total; ++s) {
    if (!is_face[s]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      const std::size_t up = s | (std::size_t{1} << v);
      if (up != s && is_face[up]) maximal = false;
    }
    if (maximal) facets.push_back(VertexSet::from_bits(s));
  }
  return SimplicialComplex(n, std::move(facets));
}

SquarefreeIdeal stanley_reisner(const SimplicialComplex& complex) {
  const int n = complex.ground();
  const auto is_face = face_table(complex);
  std::vector<VertexSet> minimal;
  for (std::size_t s = 0; s < is_face.size(); ++s) {
    if (is_face[s]) continue;
    bool all_below = true;
    for (int v = 0; v < n && all_below; ++v) {
      const std::size_t down = s & ~(std::size_t{1} << v);
      if (down != s && !is_face[down]) all_below = false;
    }
    if (all_below) minimal.push_back(VertexSet::from_bits(s));
  }
  return SquarefreeIdeal(n, std::move(minimal));
}

SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal) {
  const int n = ideal.ground();
  require_enumerable(n, "stanley_reisner_complex");
  const std::size_t total = std::size_t{1} << n;
  std::vector<VertexSet> facets;
  for (std::size_t s = 0; s < total; ++s) {
    const VertexSet f = VertexSet::from_bits(s);
    if (ideal.contains(f)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!f.contains(v) && !ideal.contains(f.with(v))) maximal = false;
    }
    if (maximal) facets.push_back(f);
  }
  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
  if (complex.is_void()) throw std::invalid_argument("alexander_dual: void complex");
  if (complex.is_simplex()) throw std::invalid_argument("alexander_dual: full simplex");
  const VertexSet universe = VertexSet::first(complex.ground());
  std::vector<VertexSet> facets;
  const SquarefreeIdeal nonfaces = stanley_reisner(complex);
  for (VertexSet u : nonfaces.gens()) facets.push_back(universe - u);
  return SimplicialComplex(complex.ground(), std::move(facets));
}

bool is_shelling(const SimplicialComplex& complex, std::span<const std::size_t> order) {
  const auto& facets = complex.facets();
  if (!complex.is_pure()) throw std::invalid_argument("is_shelling: complex is not pure");
  if (order.size() != facets.size()) throw std::invalid_argument("is_shelling: bad permutation");
  std::vector<bool> seen(facets.size(), false);
  for (std::size_t i : order) {
    if (i >= facets.size() || seen[i]) throw std::invalid_argument("is_shelling: bad permutation");
    seen[i] = true;
  }
  for (std::size_t p = 1; p < order.size(); ++p) {
    const VertexSet current = facets[order[p]];
    for (std::size_t q = 0; q < p; ++q) {
      const VertexSet meet = current & facets[order[q]];
      bool covered = false;
      for (std::size_t k = 0; k < p && !covered; ++k) {
        const VertexSet other = facets[order[k]];
        covered = (current - other).size() == 1 && meet.subset_of(current & other);
      }
      if (!covered) return false;
    }
  }
  return true;
}

std::vector<std::size_t> homology_of_faces(std::span<const VertexSet> faces, Field field) {
  if (faces.empty()) return {};
  int top = 0;
  for (VertexSet f : faces) top = std::max(top, f.size());
  // by_size[s] lists the faces with s vertices; index[s] inverts it.
  std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(top) + 1);
  for (VertexSet f : faces) by_size[static_cast<std::size_t>(f.size())].push_back(f);
  std::vector<std::unordered_map<VertexSet, int, VertexSetHash>> index(by_size.size());
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    for (std::size_t i = 0; i < by_size[s].size(); ++i) {
      index[s].emplace(by_size[s][i], static_cast<int>(i));
    }
  }

  // rank_of[s] = rank of the boundary map from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> rank_of(by_size.size() + 1, 0);
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    SparseIntMatrix m;
    m.cols = static_cast<int>(by_size[s - 1].size());
    m.rows.reserve(by_size[s].size());
    for (VertexSet f : by_size[s]) {
      std::vector<std::pair<int, int>> row;
      int sign = 1;
      for (int v : f) {
        row.emplace_back(index[s - 1].at(f.without(v)), sign);
        sign = -sign;
      }
      std::sort(row.begin(), row.end());
      m.rows.push_back(std::move(row));
    }
    rank_of[s] = field == Field::gf2 ? rank_gf2(m) : rank_rationals(m);
  }

  std::vector<std::size_t> out(by_size.size());
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    out[s] = by_size[s].size() - rank_of[s] - rank_of[s + 1];
  }
  return out;
}

std::vector<std::size_t> homology_ranks(const SimplicialComplex& complex, Field field) {
  if (complex.is_void()) return {};
  const auto faces = complex.faces();
  return homology_of_faces(faces, field);
}

}  // namespace connideals
