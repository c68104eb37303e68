// Acceptance suite: one line per criterion, nonzero exit iff any fails.
// Everything here re-derives its expectations through the library oracles
// (max-flow vs definitional connectivity, GF(2) vs Q homology) at the exact
// tolerances the checks are specified with.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include "chordal/betti.hpp"
#include "chordal/canonical.hpp"
#include "chordal/constructions.hpp"
#include "chordal/graph6.hpp"
#include "chordal/harness.hpp"
#include "chordal/invariants.hpp"

using namespace chordal;

namespace {

constexpr double kTol = 1e-7;

Graph figure_left() {
    return Graph::from_edges(
        6, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}, {4, 5}});
}

Graph figure_right() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {2, 4}, {0, 4}});
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

bool corpus_inequalities(std::string& detail) {
    long long applicable = 0;
    for (int n = 4; n <= 8; ++n) {
        CorpusOptions opts;
        opts.n = n;
        opts.jobs = 2;
        const CorpusReport report = verify_corpus(opts);
        for (const char* id : {"K1", "K2"})
            for (const CheckResult& check : report.checks)
                if (check.id == id) {
                    if (check.skipped || check.failed() != 0) {
                        detail = "violations at n = " + std::to_string(n) + " in " + id;
                        return false;
                    }
                    applicable += check.applicable;
                }
    }
    detail = "K1 and K2 clean over all chordal* classes, n = 4..8 (" + std::to_string(applicable) +
             " graph-checks)";
    return true;
}

bool projdim_identity_exhaustive(std::string& detail) {
    long long checked = 0;
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_chordal_star(g)) continue;
            const BettiTable gf2 = betti_table_hochster(g, Field::GF2);
            const BettiTable q = betti_table_hochster(g, Field::Q);
            if (gf2.entries != q.entries) {
                detail = "field mismatch at " + write_graph6(g);
                return false;
            }
            const int kappa = vertex_connectivity(g);
            if (n - kappa != proj_dim(gf2) + 1) {
                detail = "identity fails at " + write_graph6(g);
                return false;
            }
            ++checked;
        }
    detail = "n - kappa = projdim + 1 on all " + std::to_string(checked) +
             " chordal* classes with n <= 7, GF(2) and Q tables identical";
    return true;
}

bool realization(std::string& detail) {
    for (int n = 4; n <= 12; ++n) {
        const SpectrumReport report = spectrum_report(n, kDefaultSearchSeed, 2);
        if (!report.all_ok) {
            detail = "spectrum incomplete at n = " + std::to_string(n);
            return false;
        }
        if (n <= 9 && report.corpus_cross_check != "pass") {
            detail = "corpus cross-check failed at n = " + std::to_string(n);
            return false;
        }
        for (const SpectrumRow& row : report.rows) {
            const Graph g = parse_graph6(row.graph6);
            if (!is_chordal_star(g) || vertex_connectivity(g) != row.kappa ||
                (n <= 10 && vertex_connectivity_bruteforce(g) != row.kappa)) {
                detail = "witness fails re-verification at n = " + std::to_string(n) +
                         ", kappa = " + std::to_string(row.kappa);
                return false;
            }
        }
    }
    detail = "every kappa in [0, bound(n)] realized and re-verified for n = 4..12, "
             "achieved sets equal corpus sets for n <= 9";
    return true;
}

bool classification(std::string& detail) {
    CorpusOptions four;
    four.n = 4;
    const auto at4 = classify_extremal(four);
    if (at4 != std::vector<std::string>{canonical_form(path(4))}) {
        detail = "n = 4 classification is not exactly the 4-path";
        return false;
    }

    CorpusOptions nine;
    nine.n = 9;
    nine.jobs = 2;
    const auto at9 = classify_extremal(nine);
    if (at9.size() != 1) {
        detail = "n = 9 classification has " + std::to_string(at9.size()) + " classes, expected 1";
        return false;
    }
    const Graph found = parse_graph6(at9.front());
    if (vertex_connectivity(found) != 4 || vertex_connectivity_bruteforce(found) != 4 ||
        !is_chordal_star(found)) {
        detail = "n = 9 classified graph fails re-verification";
        return false;
    }
    if (canonical_form(found) != canonical_form(extremal_candidate(9))) {
        detail = "n = 9 classified graph differs from the constructed candidate";
        return false;
    }
    detail = "unique extremal class at n = 4 (the 4-path) and at n = 9 over all 274668 classes, "
             "matching the constructed candidate";
    return true;
}

bool six_vertex_examples(std::string& detail) {
    for (const Graph& g : {figure_left(), figure_right()}) {
        if (!is_chordal_star(g) || vertex_connectivity(g) != 2 || vertex_connectivity_bruteforce(g) != 2) {
            detail = "a 6-vertex witness fails chordal*/kappa = 2";
            return false;
        }
    }
    CorpusOptions six;
    six.n = 6;
    const auto classes = classify_extremal(six);
    if (classes.size() < 2) {
        detail = "fewer than two extremal classes at n = 6";
        return false;
    }
    const std::set<std::string> found(classes.begin(), classes.end());
    if (!found.count(canonical_form(figure_left())) || !found.count(canonical_form(figure_right()))) {
        detail = "published 6-vertex witnesses missing from the classification";
        return false;
    }
    detail = "both 6-vertex witnesses are chordal* with kappa = 2; extremal classification at n = 6 has " +
             std::to_string(classes.size()) + " classes";
    return true;
}

bool cycle_example(std::string& detail) {
    for (int n = 4; n <= 8; ++n) {
        const AnalyzeResult res = analyze(cycle(n), false);
        if (res.record.kappa != 2 || res.record.tau_max_complement != n - 2 ||
            res.record.kappa + res.record.tau_max_complement != n) {
            detail = "cycle example fails at n = " + std::to_string(n);
            return false;
        }
    }
    detail = "kappa(C_n) = 2, tau_max(C_n^c) = n-2, sum = n > n-1 for n = 4..8";
    return true;
}

bool dense_counterexamples(std::string& detail) {
    for (int n = 4; n <= 10; n += 2) {
        const Graph g = complete_minus_perfect_matching(n);
        if (vertex_connectivity(g) != n - 2 || (n <= 10 && vertex_connectivity_bruteforce(g) != n - 2)) {
            detail = "matching-deleted clique fails at n = " + std::to_string(n);
            return false;
        }
        if (vertex_connectivity(g) <= kappa_upper_bound(n)) {
            detail = "matching-deleted clique does not exceed the bound at n = " + std::to_string(n);
            return false;
        }
    }
    for (int n = 5; n <= 11; n += 2) {
        const Graph g = h_graph(n);
        if (vertex_connectivity(g) != n - 3 || (n <= 10 && vertex_connectivity_bruteforce(g) != n - 3)) {
            detail = "apex variant fails at n = " + std::to_string(n);
            return false;
        }
        if (vertex_connectivity(g) <= kappa_upper_bound(n)) {
            detail = "apex variant does not exceed the bound at n = " + std::to_string(n);
            return false;
        }
    }
    detail = "kappa = n-2 (even n = 4..10) and n-3 (odd n = 5..11) on the dense families, "
             "all above the chordal* ceiling";
    return true;
}

bool algebraic_corollary(std::string& detail) {
    long long chordal_star_checked = 0, fiedler_checked = 0;
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const bool complete_graph = g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2;
            if (!complete_graph) {
                const double a = algebraic_connectivity(g);
                const int kappa = vertex_connectivity(g);
                if (a > kappa + kTol) {
                    detail = "Fiedler inequality fails at " + write_graph6(g);
                    return false;
                }
                ++fiedler_checked;
            }
            if (is_chordal_star(g)) {
                const double a = algebraic_connectivity(g);
                if (a > vertex_connectivity(g) + kTol || a > kappa_upper_bound(n) + kTol) {
                    detail = "algebraic ceiling fails at " + write_graph6(g);
                    return false;
                }
                ++chordal_star_checked;
            }
        }
    detail = "a(G) <= kappa <= bound (+1e-7) on " + std::to_string(chordal_star_checked) +
             " chordal* classes; Fiedler holds on " + std::to_string(fiedler_checked) +
             " non-complete classes, n <= 7";
    return true;
}

bool oracle_equivalence(std::string& detail) {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n))
            if (vertex_connectivity(g) != vertex_connectivity_bruteforce(g)) {
                detail = "connectivity oracle mismatch at " + write_graph6(g);
                return false;
            }
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        std::uniform_real_distribution<double> dist(0.1, 0.9);
        const Graph g = random_graph(rng, n, dist(rng));
        if (vertex_connectivity(g) != vertex_connectivity_bruteforce(g)) {
            detail = "connectivity oracle mismatch on a random graph";
            return false;
        }
    }

    long long q_runs = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_chordal(g)) continue;
            const BettiTable gf2 = betti_table_hochster(g, Field::GF2);
            const BettiTable q = betti_table_hochster(g, Field::Q);  // Euler identity checked inside
            q_runs += vertex_set{1} << n;
            if (gf2.entries != q.entries) {
                detail = "field dependence at " + write_graph6(g);
                return false;
            }
            const auto strand = linear_strand_chordal(g);
            for (int i = 1; i < n; ++i)
                if (strand[static_cast<std::size_t>(i)] != gf2.at(i, i + 1)) {
                    detail = "fast strand mismatch at " + write_graph6(g);
                    return false;
                }
        }
    detail = "max-flow kappa = definitional kappa (exhaustive n <= 7 plus 1000 random graphs); "
             "fast strand = Hochster diagonal and GF(2) = Q tables on chordal n <= 7 (" +
             std::to_string(q_runs) + " Euler-checked Q homology sweeps)";
    return true;
}

bool cited_inequalities(std::string& detail) {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!has_isolated_vertex(g) && tau_max(g).value < ceil_two_sqrt_minus_two(n)) {
                detail = "cover floor fails at " + write_graph6(g);
                return false;
            }
            if (!is_chordal(g)) continue;
            const BettiTable t = betti_table_hochster(g, Field::GF2);
            if (!has_linear_resolution(t)) {
                detail = "linear resolution fails at " + write_graph6(g);
                return false;
            }
            if (is_chordal_star(g) && proj_dim(t) < tau_max(g.complement()).value) {
                detail = "projdim lower bound fails at " + write_graph6(g);
                return false;
            }
        }
    detail = "tau_max floor (isolated-free), projdim >= tau_max(complement) (chordal*) and linear "
             "resolution (chordal) hold exhaustively for n <= 7";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "connectivity inequalities over exhaustive corpora", corpus_inequalities},
        {2, "projective-dimension identity, exhaustive n <= 7", projdim_identity_exhaustive},
        {3, "realization of every admissible kappa, n = 4..12", realization},
        {4, "unique extremal classes at n = 4 and n = 9", classification},
        {5, "6-vertex witnesses and non-uniqueness at n = 6", six_vertex_examples},
        {6, "cycle example: the inequality needs chordal*", cycle_example},
        {7, "dense families exceed the chordal* ceiling", dense_counterexamples},
        {8, "algebraic connectivity ceiling", algebraic_corollary},
        {9, "oracle equivalence suite", oracle_equivalence},
        {10, "cited inequality chain, exhaustive n <= 7", cited_inequalities},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("criterion %2d: %s — %s: %s\n", c.id, ok ? "PASS" : "FAIL", c.label, detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
