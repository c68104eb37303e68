#ifndef CHORDAL_CLIQUES_HPP
#define CHORDAL_CLIQUES_HPP

#include <cstdint>
#include <functional>

#include "chordal/graph.hpp"

namespace chordal {

inline constexpr std::uint64_t kDefaultCliqueBudget = 20'000'000;

// Maximal cliques via pivoting Bron-Kerbosch, reported as vertex masks in a
// deterministic order. Throws resource_limit_error once `budget` recursion
// nodes are spent. The 0-vertex graph reports the empty clique.
void max_cliques(const Graph& g, const std::function<void(vertex_set)>& sink,
                 std::uint64_t budget = kDefaultCliqueBudget);

}  // namespace chordal

#endif
