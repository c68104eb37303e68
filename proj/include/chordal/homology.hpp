#ifndef CHORDAL_HOMOLOGY_HPP
#define CHORDAL_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

enum class Field { GF2, Q };

std::string field_name(Field f);
Field field_from_name(const std::string& name);

// Finite simplicial complex given by its inclusion-maximal faces.
// facets empty      -> the void complex (no faces at all)
// facets == {0}     -> the complex whose only face is the empty set
struct SimplicialComplex {
    int n = 0;
    std::vector<vertex_set> facets;  // antichain, sorted ascending

    bool is_void() const { return facets.empty(); }
    int dim() const;  // -2 for void, -1 for {empty}, else max |facet|-1
    // faces grouped by dimension: [k] lists the k-faces as sorted masks;
    // the empty face is not listed.
    std::vector<std::vector<vertex_set>> faces_by_dim() const;
    std::size_t face_count() const;
};

// Normalizes an arbitrary generating family: drops dominated faces, sorts.
SimplicialComplex complex_from_faces(int n, std::vector<vertex_set> faces);

// Faces = cliques of g (Bron-Kerbosch facet enumeration). Every vertex of g
// appears in some facet.
SimplicialComplex clique_complex(const Graph& g);

// Reduced homology ranks over the chosen field.
struct HomologyRanks {
    Field field = Field::GF2;
    int min_dim = 0;                // dimension encoded by ranks[0] (-1 except for void)
    std::vector<long long> ranks;   // empty for the void complex

    long long rank(int k) const {
        const long long idx = k - min_dim;
        return (idx >= 0 && idx < static_cast<long long>(ranks.size())) ? ranks[idx] : 0;
    }
};

// Boundary-matrix ranks with the standard alternating-sign convention;
// GF(2) by bit-matrix elimination, Q by fraction-free integer elimination.
// The Q path verifies the reduced Euler characteristic identity.
HomologyRanks reduced_homology_ranks(const SimplicialComplex& c, Field f);

}  // namespace chordal

#endif
