#ifndef CHORDAL_CONSTRUCTIONS_HPP
#define CHORDAL_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

inline constexpr std::uint64_t kDefaultSearchSeed = 0x5eed5eed5eedULL;

struct ConstructionRecipe {
    enum class Family { disconnected_path, complement_clique_pendants, path_power, searched };
    Family family = Family::disconnected_path;
    std::vector<int> params;
    int target_n = 0;
    int target_kappa = 0;
};

std::string family_name(ConstructionRecipe::Family f);

struct Construction {
    Graph graph;
    ConstructionRecipe recipe;
};

// A chordal graph without universal vertices on n vertices with the exact
// requested connectivity. Every return is verified against the connectivity
// oracle (and the brute-force oracle for n <= 10) before being emitted.
// Ladder: disconnected path for kappa 0, path powers for small kappa, then
// complements of pendant-decorated cliques, then a seeded local search.
Construction construct_chordal_star(int n, int kappa, std::uint64_t seed = kDefaultSearchSeed);

// Candidate for the unique extremal graph at perfect squares n = s*s: the
// complement of the clique on s hubs with s-1 pendants each; verified to be
// chordal without universal vertices and to meet the connectivity ceiling.
Graph extremal_candidate(int n);

// One verified construction per kappa in 0..kappa_upper_bound(n).
std::vector<Construction> kappa_spectrum(int n, std::uint64_t seed = kDefaultSearchSeed);

// Rebuilds the exact labeled graph a recipe describes, so reports are
// replayable from the recipe alone.
Graph realize(const ConstructionRecipe& recipe);

}  // namespace chordal

#endif
