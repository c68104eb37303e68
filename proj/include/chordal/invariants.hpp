#ifndef CHORDAL_INVARIANTS_HPP
#define CHORDAL_INVARIANTS_HPP

#include <vector>

#include "chordal/cliques.hpp"
#include "chordal/graph.hpp"

namespace chordal {

// ceil(2*sqrt(n) - 2) in exact integer arithmetic.
int ceil_two_sqrt_minus_two(int n);
// (n-1) - ceil(2*sqrt(n) - 2), the connectivity ceiling for chordal graphs
// without universal vertices.
int kappa_upper_bound(int n);

bool is_universal(const Graph& g, int v);
bool has_universal_vertex(const Graph& g);
bool has_isolated_vertex(const Graph& g);

std::vector<int> lex_bfs_order(const Graph& g);

struct ChordalityResult {
    bool chordal = false;
    // Perfect elimination ordering when chordal (every vertex's later
    // neighborhood is a clique).
    std::vector<int> elimination_order;
    // Chordless cycle of length >= 4 when not chordal.
    std::vector<int> hole;
};

ChordalityResult chordality(const Graph& g);
bool is_chordal(const Graph& g);
bool is_chordal_star(const Graph& g);
bool is_gapfree(const Graph& g);

// Exact vertex connectivity: minimum over non-adjacent pairs of the
// vertex-disjoint path count (unit max-flow on the split digraph).
// Conventions: complete graphs give n-1, disconnected graphs 0.
int vertex_connectivity(const Graph& g);
// Definitional oracle: removal sets tried by increasing size; n <= 10.
int vertex_connectivity_bruteforce(const Graph& g);

struct TauMaxResult {
    int value = 0;
    vertex_set witness_cover = 0;  // inclusion-minimal cover of that size
};

// Maximum size of an inclusion-minimal vertex cover, via enumeration of the
// maximal independent sets (maximal cliques of the complement).
TauMaxResult tau_max(const Graph& g, std::uint64_t budget = kDefaultCliqueBudget);

struct UniversalReduction {
    Graph core;
    int stripped = 0;
};

// Strips universal vertices one at a time until none is left (or a single
// vertex remains); kappa(g) = kappa(core) + stripped.
UniversalReduction universal_vertex_reduction(const Graph& g);

// Second-smallest Laplacian eigenvalue by cyclic Jacobi sweeps; n >= 2,
// absolute accuracy ~1e-9.
double algebraic_connectivity(const Graph& g);

}  // namespace chordal

#endif
