#include <doctest.h>

#include <random>

#include "connideals/betti.hpp"
#include "connideals/complex.hpp"
#include "connideals/errors.hpp"
#include "connideals/exact_rank.hpp"
#include "connideals/hypergraph.hpp"
#include "connideals/serialize.hpp"
#include "oracles.hpp"

using namespace connideals;
using oracle::Set;

namespace {

VertexSet vs(std::initializer_list<int> xs) {
  VertexSet s;
  for (int x : xs) s.insert(x);
  return s;
}

SimplicialComplex from_sets(int ground, const std::vector<std::vector<int>>& facets) {
  std::vector<VertexSet> out;
  for (const auto& f : facets) out.push_back(oracle::to_vs(f));
  return SimplicialComplex(ground, out);
}

SimplicialComplex rp2() { return from_sets(6, fixtures::rp2_facets()); }

std::vector<SimplicialComplex> random_complexes(std::mt19937& rng, int count, int ground) {
  std::vector<SimplicialComplex> out;
  for (int i = 0; i < count; ++i) {
    std::vector<VertexSet> facets;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < k; ++j) {
      facets.push_back(VertexSet::from_bits(rng() % (std::uint64_t{1} << ground)));
    }
    out.emplace_back(ground, facets);
  }
  return out;
}

}  // namespace

TEST_CASE("exact ranks") {
  SparseIntMatrix m{3, {{{0, 2}, {1, 4}}, {{0, 1}, {1, 2}}, {{2, 3}}}};
  CHECK(rank_rationals(m) == 2);
  CHECK(rank_gf2(m) == 2);

  SparseIntMatrix twos{2, {{{0, 2}}, {{1, 2}}}};
  CHECK(rank_rationals(twos) == 2);
  CHECK(rank_gf2(twos) == 0);

  SUBCASE("agrees with dense elimination, including entries that overflow 64 bits") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
      const int rows = 1 + static_cast<int>(rng() % 7);
      const int cols = 1 + static_cast<int>(rng() % 7);
      const bool huge = trial % 4 == 0;
      SparseIntMatrix s{cols, {}};
      std::vector<std::vector<oracle::Rational>> dense(rows, std::vector<oracle::Rational>(cols, 0));
      for (int r = 0; r < rows; ++r) {
        s.rows.emplace_back();
        for (int c = 0; c < cols; ++c) {
          if (rng() % 2) continue;
          int v = static_cast<int>(rng() % 7) - 3;
          if (huge) v = static_cast<int>(rng() % 2000000000) - 1000000000;
          if (v == 0) continue;
          s.rows.back().push_back({c, v});
          dense[r][c] = v;
        }
      }
      CHECK(rank_rationals(s) == oracle::dense_rank(dense, false));
      CHECK(rank_gf2(s) == oracle::dense_rank(dense, true));
    }
  }
}

TEST_CASE("complex basics") {
  const SimplicialComplex voidc(3, {});
  const SimplicialComplex irrelevant(3, {VertexSet{}});
  CHECK(voidc.is_void());
  CHECK(irrelevant.is_irrelevant());
  CHECK_FALSE(voidc == irrelevant);
  CHECK(irrelevant.faces() == std::vector<VertexSet>{VertexSet{}});
  CHECK(voidc.faces().empty());

  const SimplicialComplex c(4, {vs({0, 1}), vs({0}), vs({1, 2, 3})});
  CHECK(c.facets().size() == 2);
  CHECK(c.dimension() == 2);
  CHECK_FALSE(c.is_pure());
  CHECK(c.has_face(vs({2, 3})));
  CHECK_FALSE(c.has_face(vs({0, 2})));
  CHECK(c.faces().size() == 1 + 4 + 4 + 1);
  CHECK(SimplicialComplex(3, {VertexSet::first(3)}).is_simplex());

  CHECK(parse_field("q") == Field::rationals);
  CHECK(parse_field("GF2") == Field::gf2);
  CHECK_THROWS_AS(parse_field("gf3"), std::invalid_argument);
}

TEST_CASE("independence complexes") {
  const auto ind = independence_complex(fixtures::cycle(5), 1);
  CHECK(ind.facets().size() == 5);
  for (auto f : ind.facets()) CHECK(f.size() == 2);
  CHECK(independence_complex(fixtures::path(4), 4).is_simplex());
  CHECK(independence_complex(fixtures::path(3), 2).facets() ==
        std::vector<VertexSet>{vs({0, 1}), vs({0, 2}), vs({1, 2})});

  for (const Graph& g : fixtures::all_graphs_up_to(6)) {
    const oracle::Adj adj(g);
    for (int r = 1; r <= 3; ++r) {
      auto facets = oracle::to_sets(independence_complex(g, r).facets());
      std::sort(facets.begin(), facets.end());
      CHECK(facets == oracle::independence_facets(adj, r));
    }
  }
}

TEST_CASE("Stanley-Reisner ideals") {
  CHECK(stanley_reisner(independence_complex(fixtures::cycle(5), 1)) == conn_ideal(fixtures::cycle(5), 2));
  CHECK(stanley_reisner(independence_complex(fixtures::cycle(5), 2)) == conn_ideal(fixtures::cycle(5), 3));
  CHECK(stanley_reisner(independence_complex(fixtures::path(4), 2)) == conn_ideal(fixtures::path(4), 3));
  CHECK(stanley_reisner(SimplicialComplex(3, {VertexSet::first(3)})).is_zero());
  CHECK(stanley_reisner(SimplicialComplex(2, {VertexSet{}})).gens() ==
        std::vector<VertexSet>{vs({0}), vs({1})});

  SUBCASE("independence complexes correspond to connected ideals") {
    for (const Graph& g : fixtures::all_graphs_up_to(7)) {
      for (int t = 2; t <= 4; ++t) {
        CHECK(stanley_reisner(independence_complex(g, t - 1)) == conn_ideal(g, t));
      }
    }
  }

  SUBCASE("agrees with brute-force minimal non-faces and round-trips") {
    std::mt19937 rng(23);
    for (const auto& c : random_complexes(rng, 200, 5)) {
      const auto faces = oracle::faces_of(oracle::to_sets(c.facets()));
      CHECK(oracle::to_sets(stanley_reisner(c).gens()) == oracle::minimal_nonfaces(5, faces));
      CHECK(stanley_reisner_complex(stanley_reisner(c)) == c);
    }
  }
}

TEST_CASE("Alexander duality") {
  const SimplicialComplex c = stanley_reisner_complex(SquarefreeIdeal(3, {vs({0, 1}), vs({1, 2})}));
  CHECK(alexander_dual(c).facets() == std::vector<VertexSet>{vs({0}), vs({2})});
  CHECK_THROWS_AS(alexander_dual(SimplicialComplex(3, {})), std::invalid_argument);
  CHECK_THROWS_AS(alexander_dual(SimplicialComplex(3, {VertexSet::first(3)})), std::invalid_argument);

  // the dual's non-faces are generated by the complements of the facets
  const auto ind = independence_complex(fixtures::two_k2(), 1);
  const auto dual = alexander_dual(ind);
  CHECK(dual.facets() == std::vector<VertexSet>{vs({0, 1}), vs({2, 3})});
  std::vector<VertexSet> complements;
  for (auto f : ind.facets()) complements.push_back(VertexSet::first(4) - f);
  CHECK(stanley_reisner(dual) == SquarefreeIdeal(4, complements));
  CHECK(stanley_reisner(dual).gens() ==
        std::vector<VertexSet>{vs({0, 2}), vs({0, 3}), vs({1, 2}), vs({1, 3})});

  std::mt19937 rng(29);
  for (int ground = 1; ground <= 5; ++ground) {
    for (const auto& x : random_complexes(rng, 100, ground)) {
      if (x.is_void() || x.is_simplex()) continue;
      CHECK(alexander_dual(alexander_dual(x)) == x);
    }
  }
}

TEST_CASE("shellings") {
  const SimplicialComplex path(3, {vs({0, 1}), vs({1, 2})});
  const std::vector<std::size_t> id{0, 1};
  const std::vector<std::size_t> rev{1, 0};
  CHECK(is_shelling(path, id));
  const SimplicialComplex split(4, {vs({0, 1}), vs({2, 3})});
  CHECK_FALSE(is_shelling(split, id));
  CHECK_FALSE(is_shelling(split, rev));
  CHECK_THROWS_AS(is_shelling(SimplicialComplex(3, {vs({0, 1}), vs({2})}), id), std::invalid_argument);
  const std::vector<std::size_t> bad{0, 0};
  CHECK_THROWS_AS(is_shelling(path, bad), std::invalid_argument);

  SUBCASE("admissible orders of conn_2(P_4) give shellings of the dual") {
    const auto ideal = conn_ideal(fixtures::path(4), 2);
    const auto dual = alexander_dual(stanley_reisner_complex(ideal));
    std::vector<std::size_t> perm{0, 1, 2};
    int admissible = 0;
    do {
      std::vector<std::size_t> facet_order;
      for (auto i : perm) {
        const VertexSet f = VertexSet::first(4) - ideal.gens()[i];
        facet_order.push_back(static_cast<std::size_t>(
            std::find(dual.facets().begin(), dual.facets().end(), f) - dual.facets().begin()));
      }
      const bool lq = is_admissible(ideal, perm).has_value();
      admissible += lq;
      CHECK(is_shelling(dual, facet_order) == lq);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(admissible > 0);
  }
}

TEST_CASE("reduced homology") {
  CHECK(homology_ranks(SimplicialComplex(4, {VertexSet::first(4)}), Field::rationals) ==
        std::vector<std::size_t>{0, 0, 0, 0, 0});
  const SimplicialComplex triangle(3, {vs({0, 1}), vs({1, 2}), vs({0, 2})});
  CHECK(homology_ranks(triangle, Field::gf2) == std::vector<std::size_t>{0, 0, 1});
  CHECK(homology_ranks(SimplicialComplex(2, {VertexSet{}}), Field::rationals) ==
        std::vector<std::size_t>{1});
  CHECK(homology_ranks(SimplicialComplex(2, {}), Field::rationals).empty());

  SUBCASE("projective plane") {
    const auto x = rp2();
    // closed surface: every edge lies in exactly two triangles, links of
    // vertices are cycles, and the Euler characteristic is 1
    std::map<VertexSet, int, LexLess> edge_count;
    for (auto f : x.facets()) {
      for (int v : f) ++edge_count[f.without(v)];
    }
    CHECK(edge_count.size() == 15);
    for (const auto& [e, k] : edge_count) CHECK(k == 2);
    for (int v = 0; v < 6; ++v) {
      std::vector<VertexSet> link;
      for (auto f : x.facets()) {
        if (f.contains(v)) link.push_back(f.without(v));
      }
      const SimplicialComplex lk(6, link);
      CHECK(homology_ranks(lk, Field::gf2) == std::vector<std::size_t>{0, 0, 1});
    }
    long chi = 0;
    for (auto f : x.faces()) {
      if (!f.empty()) chi += (f.size() % 2 == 1) ? 1 : -1;
    }
    CHECK(chi == 1);
    CHECK(homology_ranks(x, Field::gf2) == std::vector<std::size_t>{0, 0, 1, 1});
    CHECK(homology_ranks(x, Field::rationals) == std::vector<std::size_t>{0, 0, 0, 0});
  }

  SUBCASE("agrees with dense elimination and with the Euler characteristic") {
    std::mt19937 rng(31);
    for (const auto& c : random_complexes(rng, 150, 6)) {
      const auto faces = oracle::faces_of(oracle::to_sets(c.facets()));
      for (Field f : {Field::rationals, Field::gf2}) {
        const auto h = homology_ranks(c, f);
        CHECK(h == oracle::reduced_homology(faces, f == Field::gf2));
        long euler = 0;
        long faces_alt = 0;
        for (std::size_t d = 0; d < h.size(); ++d) {
          euler += (d % 2 == 0 ? -1 : 1) * static_cast<long>(h[d]);
        }
        for (const auto& s : faces) faces_alt += (s.size() % 2 == 0 ? -1 : 1);
        CHECK(euler == faces_alt);
        auto shuffled = c.facets();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(homology_ranks(SimplicialComplex(6, shuffled), f) == h);
      }
    }
  }
}

TEST_CASE("Betti tables") {
  CHECK(betti_table(SquarefreeIdeal(3, {}), Field::rationals).empty());
  const auto principal = betti_table(SquarefreeIdeal(2, {vs({0, 1})}), Field::gf2);
  CHECK(principal.entries.size() == 1);
  CHECK(principal.at(0, 2) == 1);
  CHECK_THROWS_AS(betti_table(SquarefreeIdeal(2, {VertexSet{}}), Field::rationals),
                  std::invalid_argument);
  BettiLimits small;
  small.max_ground = 4;
  CHECK_THROWS_AS(betti_table(conn_ideal(fixtures::cycle(5), 2), Field::rationals, small), ResourceLimit);

  for (Field f : {Field::rationals, Field::gf2}) {
    const auto c5 = betti_table(conn_ideal(fixtures::cycle(5), 2), f);
    CHECK(c5.regularity() == 3);
    CHECK(c5.at(0, 2) == 5);
  }

  CHECK(betti_to_json(principal).dump() == R"({"entries":[[0,2,1]],"field":"gf2"})");

  SUBCASE("agrees with Hochster over every subset") {
    for (const Graph& g : fixtures::all_graphs_up_to(6)) {
      for (int t = 2; t <= 3; ++t) {
        const auto ideal = conn_ideal(g, t);
        if (ideal.is_zero()) continue;
        for (Field f : {Field::rationals, Field::gf2}) {
          const auto table = betti_table(ideal, f);
          CHECK(table.entries ==
                oracle::betti(g.vertex_count(), oracle::to_sets(ideal.gens()), f == Field::gf2));
          CHECK(table.at(0, t) == ideal.size());
        }
      }
    }
  }
}

TEST_CASE("regularity and linear resolutions") {
  for (Field f : {Field::rationals, Field::gf2}) {
    CHECK(regularity(conn_ideal(fixtures::cycle(6), 3), f) == 4);
    CHECK(regularity(conn_ideal(fixtures::cycle(7), 3), f) == 5);
    CHECK(regularity(conn_ideal(fixtures::path(4), 2), f) == 2);
    CHECK_FALSE(has_linear_resolution(conn_ideal(fixtures::cycle(5), 2), f));
    CHECK(has_linear_resolution(conn_ideal(fixtures::cycle(4), 2), f));
    CHECK(has_linear_resolution(SquarefreeIdeal(4, {}), f));
  }
  CHECK_THROWS_AS(regularity(SquarefreeIdeal(4, {}), Field::rationals), std::invalid_argument);
  CHECK_THROWS_AS(has_linear_resolution(SquarefreeIdeal(3, {vs({0}), vs({1, 2})}), Field::gf2),
                  std::invalid_argument);

  const auto sr = stanley_reisner(rp2());
  CHECK(has_linear_resolution(sr, Field::rationals));
  CHECK_FALSE(has_linear_resolution(sr, Field::gf2));
  CHECK(betti_table(sr, Field::gf2).at(2, 6) == 1);
  CHECK(betti_table(sr, Field::rationals).at(2, 6) == 0);

  SUBCASE("cycle formula") {
    CHECK(cycle_regularity_formula(6, 3) == 3);
    CHECK(cycle_regularity_formula(5, 2) == 2);
    CHECK(cycle_regularity_formula(9, 2) == 3);
    CHECK_THROWS_AS(cycle_regularity_formula(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(cycle_regularity_formula(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(cycle_regularity_formula(5, 1), std::invalid_argument);
    for (int n = 3; n <= 9; ++n) {
      for (int t = 2; t <= std::min(n, 4); ++t) {
        const auto ideal = conn_ideal(fixtures::cycle(n), t);
        CHECK(regularity(ideal, Field::rationals) - 1 == cycle_regularity_formula(n, t));
      }
    }
  }

  SUBCASE("regularity does not grow on induced subgraphs") {
    std::mt19937 rng(37);
    const auto graphs = fixtures::all_graphs(7);
    for (int trial = 0; trial < 150; ++trial) {
      const Graph& g = graphs[rng() % graphs.size()];
      const int t = 2 + trial % 2;
      const auto ideal = conn_ideal(g, t);
      if (ideal.is_zero()) continue;
      const auto sub = induced_subgraph(g, VertexSet::first(7).without(static_cast<int>(rng() % 7)));
      const auto sub_ideal = conn_ideal(sub.graph, t);
      if (sub_ideal.is_zero()) continue;
      CHECK(regularity(sub_ideal, Field::gf2) <= regularity(ideal, Field::gf2));
    }
  }
}

TEST_CASE("resolution properties over small graphs") {
  for (const Graph& g : fixtures::all_graphs_up_to(7)) {
    for (int t = 2; t <= 3; ++t) {
      const auto ideal = conn_ideal(g, t);
      const bool lq = find_admissible_order(ideal).has_value();
      const bool long_cycle = has_long_induced_cycle(g, t + 2).has_value();
      for (Field f : {Field::rationals, Field::gf2}) {
        const bool lr = has_linear_resolution(ideal, f);
        if (lr) CHECK(is_t_gap_free(g, t));
        if (long_cycle) CHECK_FALSE(lr);
        if (lq) CHECK(lr);
      }
    }
  }
}

TEST_CASE("admissible orders and shellings of the dual") {
  for (const Graph& g : fixtures::all_graphs_up_to(6)) {
    for (int t = 2; t <= 3; ++t) {
      const auto ideal = conn_ideal(g, t);
      if (ideal.size() < 2 || ideal.size() > 6) continue;
      const auto dual = alexander_dual(stanley_reisner_complex(ideal));
      std::vector<std::size_t> perm(ideal.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<std::size_t> facet_order;
        for (auto i : perm) {
          const VertexSet f = VertexSet::first(g.vertex_count()) - ideal.gens()[i];
          facet_order.push_back(static_cast<std::size_t>(
              std::find(dual.facets().begin(), dual.facets().end(), f) - dual.facets().begin()));
        }
        CHECK(is_shelling(dual, facet_order) == is_admissible(ideal, perm).has_value());
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}
