#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "chordal/betti.hpp"
#include "chordal/canonical.hpp"
#include "chordal/errors.hpp"
#include "chordal/graph.hpp"
#include "chordal/homology.hpp"
#include "chordal/invariants.hpp"
#include "oracles.hpp"

using namespace chordal;

namespace {

Graph hexagon_triangle() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {2, 4}, {0, 4}});
}

// Betti table computed purely through the test oracles.
std::map<std::pair<int, int>, long long> brute_table(const Graph& g, bool mod2) {
    std::map<std::pair<int, int>, long long> table{{{0, 0}, 1}};
    for (int j = 1; j <= g.order(); ++j)
        for (int i = 1; i <= j; ++i) {
            const long long b = oracles::brute_betti(g, i, j, mod2);
            if (b != 0) table[{i, j}] = b;
        }
    return table;
}

}  // namespace

TEST_CASE("clique complexes") {
    CHECK(clique_complex(complete(3)).facets == std::vector<vertex_set>{0b111});
    CHECK(clique_complex(path(4)).facets == std::vector<vertex_set>{0b0011, 0b0110, 0b1100});
    // hexagon with inscribed triangle: four triangular facets
    CHECK(clique_complex(hexagon_triangle()).facets ==
          std::vector<vertex_set>{0b000111, 0b010101, 0b011100, 0b110001});
    CHECK(clique_complex(Graph(0)).facets == std::vector<vertex_set>{0});
    CHECK(clique_complex(Graph(2)).facets == std::vector<vertex_set>{0b01, 0b10});
}

TEST_CASE("complex normalization drops dominated faces") {
    const SimplicialComplex c = complex_from_faces(3, {0b011, 0b111, 0b001, 0b100});
    CHECK(c.facets == std::vector<vertex_set>{0b111});
    CHECK(c.dim() == 2);
    CHECK(c.face_count() == 7);
}

TEST_CASE("reduced homology reference complexes") {
    // hollow triangle: a circle
    const SimplicialComplex circle = complex_from_faces(3, {0b011, 0b101, 0b110});
    const auto circle_ranks = reduced_homology_ranks(circle, Field::Q);
    CHECK(circle_ranks.rank(0) == 0);
    CHECK(circle_ranks.rank(1) == 1);

    // full simplex: contractible
    const auto simplex_ranks = reduced_homology_ranks(clique_complex(complete(4)), Field::Q);
    for (int k = -1; k <= 3; ++k) CHECK(simplex_ranks.rank(k) == 0);

    // two points
    const auto two_points = reduced_homology_ranks(clique_complex(Graph(2)), Field::GF2);
    CHECK(two_points.rank(0) == 1);
    CHECK(two_points.rank(-1) == 0);

    // hollow tetrahedron: a 2-sphere
    const SimplicialComplex sphere = complex_from_faces(4, {0b0111, 0b1011, 0b1101, 0b1110});
    CHECK(reduced_homology_ranks(sphere, Field::Q).rank(2) == 1);
    CHECK(reduced_homology_ranks(sphere, Field::Q).rank(1) == 0);
    CHECK(reduced_homology_ranks(sphere, Field::GF2).rank(2) == 1);

    // degenerate complexes
    CHECK(reduced_homology_ranks(SimplicialComplex{}, Field::Q).rank(-1) == 0);  // void
    const SimplicialComplex just_empty = complex_from_faces(0, {0});
    CHECK(reduced_homology_ranks(just_empty, Field::Q).rank(-1) == 1);
}

TEST_CASE("reduced homology sees torsion only over GF2") {
    // minimal 6-vertex projective plane
    const SimplicialComplex rp2 = complex_from_faces(
        6, {0b000111, 0b001011, 0b010101, 0b101001, 0b110001, 0b100110, 0b011010, 0b110010, 0b011100,
            0b101100});
    const auto q = reduced_homology_ranks(rp2, Field::Q);
    CHECK(q.rank(0) == 0);
    CHECK(q.rank(1) == 0);
    CHECK(q.rank(2) == 0);
    const auto gf2 = reduced_homology_ranks(rp2, Field::GF2);
    CHECK(gf2.rank(1) == 1);
    CHECK(gf2.rank(2) == 1);
}

TEST_CASE("homology matches the dense oracle on random induced complexes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = oracles::random_graph(rng, n, 0.55);
        const vertex_set w = rng() & g.vertex_mask();
        const auto ranks_gf2 = reduced_homology_ranks(clique_complex(g.induced(w)), Field::GF2);
        const auto ranks_q = reduced_homology_ranks(clique_complex(g.induced(w)), Field::Q);
        for (int d = 0; d < n; ++d) {
            CHECK(ranks_gf2.rank(d) == oracles::brute_homology_rank(g, w, d, true));
            CHECK(ranks_q.rank(d) == oracles::brute_homology_rank(g, w, d, false));
        }
    }
}

TEST_CASE("hochster table of the 4-path") {
    const BettiTable t = betti_table_hochster(path(4), Field::GF2);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 2) == 3);
    CHECK(t.at(2, 3) == 2);
    CHECK(t.at(3, 4) == 0);
    CHECK(proj_dim(t) == 2);
    CHECK(has_linear_resolution(t));
}

TEST_CASE("hochster tables match the oracle for every graph up to n = 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            CHECK(betti_table_hochster(g, Field::GF2).entries == brute_table(g, true));
            CHECK(betti_table_hochster(g, Field::Q).entries == brute_table(g, false));
        }
}

TEST_CASE("frozen tables for cycle, clique and edgeless inputs") {
    const BettiTable c6 = betti_table_hochster(cycle(6), Field::Q);
    const std::map<std::pair<int, int>, long long> c6_expected{
        {{0, 0}, 1}, {{1, 2}, 9}, {{2, 3}, 16}, {{3, 4}, 9}, {{4, 6}, 1}};
    CHECK(c6.entries == c6_expected);
    CHECK(proj_dim(c6) == 4);
    CHECK(!has_linear_resolution(c6));
    CHECK(betti_table_hochster(cycle(6), Field::GF2).entries == c6_expected);

    const BettiTable k4 = betti_table_hochster(complete(4), Field::GF2);
    CHECK(k4.entries == std::map<std::pair<int, int>, long long>{{{0, 0}, 1}});
    CHECK(proj_dim(k4) == 0);
    CHECK(has_linear_resolution(k4));

    const BettiTable e4 = betti_table_hochster(Graph(4), Field::GF2);
    const std::map<std::pair<int, int>, long long> e4_expected{
        {{0, 0}, 1}, {{1, 2}, 6}, {{2, 3}, 8}, {{3, 4}, 3}};
    CHECK(e4.entries == e4_expected);
    CHECK(proj_dim(e4) == 3);
}

TEST_CASE("generator count equals the complement edge count, n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n))
            CHECK(betti_table_hochster(g, Field::GF2).at(1, 2) ==
                  static_cast<long long>(g.complement().edge_count()));
}

TEST_CASE("linear strand fast path") {
    const auto p4 = linear_strand_chordal(path(4));
    CHECK(p4 == std::vector<long long>{0, 3, 2, 0});
    const auto p3k1 = linear_strand_chordal(Graph::from_edges(4, {{0, 1}, {1, 2}}));
    CHECK(p3k1 == std::vector<long long>{0, 4, 4, 1});
    CHECK(linear_strand_chordal(complete(4)) == std::vector<long long>{0, 0, 0, 0});
    CHECK_THROWS_AS(linear_strand_chordal(cycle(4)), std::invalid_argument);
}

TEST_CASE("linear strand equals the hochster diagonal on chordal graphs, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_chordal(g)) continue;
            const auto strand = linear_strand_chordal(g);
            const BettiTable t = betti_table_hochster(g, Field::GF2);
            for (int i = 1; i < n; ++i) CHECK(strand[static_cast<std::size_t>(i)] == t.at(i, i + 1));
        }
}

TEST_CASE("chordal collapsibility: induced complexes only carry rank c-1 in dimension 0") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_chordal(g)) continue;
            for (vertex_set w = 1; w < (vertex_set{1} << n); ++w) {
                const auto ranks = reduced_homology_ranks(clique_complex(g.induced(w)), Field::GF2);
                CHECK(ranks.rank(0) == induced_component_count(g, w) - 1);
                for (int d = 1; d < n; ++d) CHECK(ranks.rank(d) == 0);
            }
        }
}

TEST_CASE("field independence of tables on chordal graphs, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_chordal(g)) continue;
            CHECK(betti_table_hochster(g, Field::GF2).entries == betti_table_hochster(g, Field::Q).entries);
        }
}

TEST_CASE("linear resolution and no-gap strand on chordal graphs, n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_chordal(g)) continue;
            const BettiTable t = betti_table_hochster(g, Field::GF2);
            CHECK(has_linear_resolution(t));
            const int pd = proj_dim(t);
            for (int i = 1; i <= pd; ++i) CHECK(t.at(i, i + 1) != 0);
        }
}

TEST_CASE("betti connectivity on reference graphs") {
    CHECK(kappa_via_betti(path(4)) == 1);
    CHECK(kappa_via_betti(hexagon_triangle()) == 2);
    CHECK(kappa_via_betti(clique_with_pendants(3, {2, 2, 2}).complement()) == 4);
    CHECK(kappa_via_betti(path(4), Field::Q) == 1);
    CHECK_THROWS_AS(kappa_via_betti(cycle(5)), std::domain_error);
    CHECK_THROWS_AS(kappa_via_betti(complete(4)), std::domain_error);
    CHECK_THROWS_AS(kappa_via_betti(Graph(1)), std::domain_error);
}

TEST_CASE("betti connectivity equals max-flow connectivity on chordal* graphs, n <= 8") {
    for (int n = 2; n <= 8; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_chordal_star(g)) continue;
            CHECK(kappa_via_betti(g) == vertex_connectivity(g));
        }
}

TEST_CASE("projdim identity on reference graphs") {
    const auto p4 = check_projdim_kappa_identity(path(4));
    CHECK(p4.n_minus_kappa == 3);
    CHECK(p4.projdim_plus_one == 3);
    CHECK(p4.holds);

    const auto fig = check_projdim_kappa_identity(hexagon_triangle());
    CHECK(fig.n_minus_kappa == 4);
    CHECK(fig.projdim_plus_one == 4);
    CHECK(fig.holds);

    const auto pp = check_projdim_kappa_identity(path_power(6, 2));
    CHECK(pp.n_minus_kappa == 4);
    CHECK(pp.projdim_plus_one == 4);
    CHECK(pp.holds);

    CHECK_THROWS_AS(check_projdim_kappa_identity(cycle(6)), std::domain_error);
}

TEST_CASE("projdim lower bound from the complement cover number, chordal* n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_chordal_star(g)) continue;
            const Graph comp = g.complement();
            if (has_isolated_vertex(comp)) continue;
            CHECK(proj_dim(betti_table_hochster(g, Field::GF2)) >= tau_max(comp).value);
        }
}

TEST_CASE("table entries never exceed internal degree n") {
    for (const Graph& g : enumerate_graphs(5))
        for (const auto& [key, value] : betti_table_hochster(g, Field::GF2).entries) {
            CHECK(key.second <= 5);
            CHECK(value > 0);
        }
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(betti_table_hochster(Graph(17), Field::GF2), unsupported_error);
    CHECK_THROWS_AS(kappa_via_betti(Graph(17)), unsupported_error);
}
