#ifndef CHORDAL_CANONICAL_HPP
#define CHORDAL_CANONICAL_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

// Byte string identifying the isomorphism class: the graph6 encoding of the
// relabeling that minimizes the adjacency bit string. Equal forms iff
// isomorphic.
using CanonicalForm = std::string;

// Copy of g with vertex v renamed to perm[v].
Graph relabeled(const Graph& g, std::span<const int> perm);

// Vertex order realizing the lexicographically smallest adjacency bit
// string; n <= 16. position i holds the original vertex placed there.
std::vector<int> canonical_ordering(const Graph& g);
Graph canonical_relabel(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// All graphs on n vertices, one per isomorphism class, in canonical order;
// 1 <= n <= 9 (larger corpora are ingested from graph6 files instead).
std::vector<Graph> enumerate_graphs(int n);
void enumerate_graphs(int n, const std::function<void(const Graph&)>& sink);
std::size_t count_graph_classes(int n);

}  // namespace chordal

#endif
