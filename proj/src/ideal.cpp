#include "connideals/ideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace connideals {

SquarefreeIdeal::SquarefreeIdeal(int ground, std::vector<VertexSet> gens)
    : ground_(ground), gens_(std::move(gens)) {
  if (ground < 0 || ground > VertexSet::kCapacity) {
    throw std::invalid_argument("ideal ground set size unsupported");
  }
  std::sort(gens_.begin(), gens_.end(), LexLess{});
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  const VertexSet universe = VertexSet::first(ground);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!gens_[i].subset_of(universe)) {
      throw std::invalid_argument("generator " + gens_[i].to_string() + " outside ground set");
    }
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      if (i != j && gens_[j].subset_of(gens_[i])) {
        throw std::invalid_argument("generators do not form an antichain");
      }
    }
  }
}

std::optional<int> SquarefreeIdeal::generating_degree() const {
  if (gens_.empty()) return std::nullopt;
  const int d = gens_.front().size();
  for (VertexSet u : gens_) {
    if (u.size() != d) return std::nullopt;
  }
  return d;
}

VertexSet SquarefreeIdeal::support() const {
  VertexSet out;
  for (VertexSet u : gens_) out |= u;
  return out;
}

bool SquarefreeIdeal::contains(VertexSet s) const {
  return std::any_of(gens_.begin(), gens_.end(), [s](VertexSet u) { return u.subset_of(s); });
}

std::optional<std::size_t> SquarefreeIdeal::index_of(VertexSet s) const {
  const auto it = std::lower_bound(gens_.begin(), gens_.end(), s, LexLess{});
  if (it == gens_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - gens_.begin());
}

SquarefreeIdeal minimalize(int ground, std::vector<VertexSet> gens) {
  std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<VertexSet> kept;
  for (VertexSet u : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [u](VertexSet k) { return k.subset_of(u); });
    if (!redundant) kept.push_back(u);
  }
  return SquarefreeIdeal(ground, std::move(kept));
}

SquarefreeIdeal conn_ideal(const Graph& g, int t) {
  // t = 1 is accepted too: conn_1 is the ideal of all variables.
  return SquarefreeIdeal(g.vertex_count(), connected_t_subsets(g, t));
}

SquarefreeIdeal path_ideal(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("path_ideal: t must be positive");
  std::unordered_set<VertexSet, VertexSetHash> found;
  std::function<void(int, VertexSet)> walk = [&](int last, VertexSet used) {
    if (used.size() == t) {
      found.insert(used);
      return;
    }
    for (int w : g.neighbors(last) - used) walk(w, used.with(w));
  };
  for (int v = 0; v < g.vertex_count(); ++v) walk(v, VertexSet::singleton(v));
  return minimalize(g.vertex_count(), {found.begin(), found.end()});
}

namespace {

void check_permutation(std::size_t m, std::span<const std::size_t> order) {
  if (order.size() != m) throw std::invalid_argument("order length differs from generator count");
  std::vector<bool> seen(m, false);
  for (std::size_t idx : order) {
    if (idx >= m || seen[idx]) throw std::invalid_argument("order is not a permutation");
    seen[idx] = true;
  }
}

}  // namespace

std::optional<AdmissibleOrder> is_admissible(const SquarefreeIdeal& ideal,
                                             std::span<const std::size_t> order) {
  const auto& gens = ideal.gens();
  check_permutation(gens.size(), order);
  AdmissibleOrder cert;
  cert.order.assign(order.begin(), order.end());
  cert.witness.resize(order.size());
  for (std::size_t p = 1; p < order.size(); ++p) {
    const VertexSet current = gens[order[p]];
    cert.witness[p].resize(p);
    for (std::size_t q = 0; q < p; ++q) {
      const VertexSet target = colon(gens[order[q]], current);
      bool found = false;
      for (std::size_t k = 0; k < p && !found; ++k) {
        const VertexSet c = colon(gens[order[k]], current);
        if (c.size() == 1 && c.subset_of(target)) {
          cert.witness[p][q] = k;
          found = true;
        }
      }
      if (!found) return std::nullopt;
    }
  }
  return cert;
}

bool replay_certificate(const SquarefreeIdeal& ideal, const AdmissibleOrder& cert) {
  const auto& gens = ideal.gens();
  try {
    check_permutation(gens.size(), cert.order);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (cert.witness.size() != cert.order.size()) return false;
  for (std::size_t p = 1; p < cert.order.size(); ++p) {
    if (cert.witness[p].size() != p) return false;
    const VertexSet current = gens[cert.order[p]];
    for (std::size_t q = 0; q < p; ++q) {
      const std::size_t k = cert.witness[p][q];
      if (k >= p) return false;
      const VertexSet c = colon(gens[cert.order[k]], current);
      if (c.size() != 1 || !c.subset_of(colon(gens[cert.order[q]], current))) return false;
    }
  }
  return true;
}

}  // namespace connideals
