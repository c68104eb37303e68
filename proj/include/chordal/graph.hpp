#ifndef CHORDAL_GRAPH_HPP
#define CHORDAL_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace chordal {

// Vertex subsets are bitmasks over 0..n-1.
using vertex_set = std::uint64_t;

inline int popcount(vertex_set s) { return __builtin_popcountll(s); }
inline int lowest_vertex(vertex_set s) { return __builtin_ctzll(s); }
inline vertex_set bit(int v) { return vertex_set{1} << v; }

// Simple undirected graph on vertices 0..n-1, n <= 64.
// Adjacency is kept as one neighbor bitmask per vertex; no loops, no
// multi-edges by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    vertex_set vertex_mask() const;
    bool has_edge(int u, int v) const;
    vertex_set neighbors(int v) const;
    int degree(int v) const { return popcount(neighbors(v)); }
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // sorted (u,v), u < v

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    Graph complement() const;
    // Induced subgraph on the kept vertices, relabeled by increasing index.
    Graph induced(vertex_set keep) const;

    // Connected components as vertex masks, ordered by lowest member.
    std::vector<vertex_set> components() const;
    int component_count() const;
    bool connected() const { return component_count() <= 1; }
    // Component of the induced subgraph on `within` containing `v`.
    vertex_set reachable(int v, vertex_set within) const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Named families.
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
// Complete graph on an even number of vertices minus the perfect matching
// {0,1},{2,3},...
Graph complete_minus_perfect_matching(int n);
// complete_minus_perfect_matching(n-1) plus a new vertex n-1 adjacent to
// 1..n-2 (everything except vertex 0); n odd, n >= 3.
Graph h_graph(int n);
// k-th power of the path: i ~ j iff 0 < |i-j| <= k.
Graph path_power(int n, int k);
// Clique on m hub vertices 0..m-1; hub i carries pendants[i] >= 1 leaves.
Graph clique_with_pendants(int m, std::span<const int> pendants);
Graph clique_with_pendants(int m, std::initializer_list<int> pendants);

// Number of components of the induced subgraph on `keep` (0 for empty set).
int induced_component_count(const Graph& g, vertex_set keep);

}  // namespace chordal

#endif
