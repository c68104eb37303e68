#ifndef CHORDAL_BETTI_HPP
#define CHORDAL_BETTI_HPP

#include <map>
#include <utility>
#include <vector>

#include "chordal/graph.hpp"
#include "chordal/homology.hpp"

namespace chordal {

// Graded Betti numbers of the quotient by the complement's edge ideal,
// indexed (homological index i, internal degree j). Only nonzero entries are
// stored; (0,0) -> 1 is always present.
struct BettiTable {
    int n = 0;
    Field field = Field::GF2;
    std::map<std::pair<int, int>, long long> entries;

    long long at(int i, int j) const {
        const auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

// Full table via the subset formula: beta_{i,j} sums the reduced homology
// rank in dimension j-i-1 of the clique complex restricted to each j-subset
// of the vertices. Requires n <= 16 (2^n sweep).
BettiTable betti_table_hochster(const Graph& g, Field f);

// beta_{i,i+1} for i = 1..n-1 (index 0 unused), computed by summing
// component-count excesses of induced subgraphs; valid as the whole story
// only for chordal graphs, which is why chordality is a precondition.
std::vector<long long> linear_strand_chordal(const Graph& g);

// Largest homological index with a nonzero entry (0 for the zero ideal).
int proj_dim(const BettiTable& t);

// True iff every entry with i >= 1 sits in degree j = i + 1.
bool has_linear_resolution(const BettiTable& t);

// Largest i in 0..n-1 with beta_{n-i,n-i+1} = 0, read off the linear strand
// computed through the homology engine. Requires a chordal graph without
// universal vertices, n >= 2; equals the vertex connectivity there.
int kappa_via_betti(const Graph& g, Field f = Field::GF2);

struct ProjdimIdentity {
    int n_minus_kappa = 0;
    int projdim_plus_one = 0;
    bool holds = false;
};

// Both sides of "n - kappa = projdim + 1" for chordal graphs without
// universal vertices.
ProjdimIdentity check_projdim_kappa_identity(const Graph& g, Field f = Field::GF2);

}  // namespace chordal

#endif
