#include "chordal/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chordal/errors.hpp"

namespace chordal {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > 64) throw std::invalid_argument("graph order must be in 0..64");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

vertex_set Graph::vertex_mask() const {
    return n_ == 64 ? ~vertex_set{0} : (vertex_set{1} << n_) - 1;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

vertex_set Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto m : adj_) twice += popcount(m);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (vertex_set m = adj_[u] & ~(bit(u) | (bit(u) - 1)); m; m &= m - 1)
            out.emplace_back(u, lowest_vertex(m));
    return out;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

Graph Graph::complement() const {
    Graph g(n_);
    const vertex_set all = vertex_mask();
    for (int v = 0; v < n_; ++v) g.adj_[v] = all & ~adj_[v] & ~bit(v);
    return g;
}

Graph Graph::induced(vertex_set keep) const {
    if (keep & ~vertex_mask()) throw std::invalid_argument("vertex set member out of range");
    std::vector<int> label(static_cast<std::size_t>(n_), -1);
    int m = 0;
    for (vertex_set s = keep; s; s &= s - 1) label[lowest_vertex(s)] = m++;
    Graph g(m);
    for (vertex_set s = keep; s; s &= s - 1) {
        const int v = lowest_vertex(s);
        for (vertex_set t = adj_[v] & keep; t; t &= t - 1)
            g.adj_[label[v]] |= bit(label[lowest_vertex(t)]);
    }
    return g;
}

vertex_set Graph::reachable(int v, vertex_set within) const {
    check_vertex(v);
    vertex_set seen = bit(v) & within;
    vertex_set frontier = seen;
    while (frontier) {
        vertex_set next = 0;
        for (vertex_set s = frontier; s; s &= s - 1) next |= adj_[lowest_vertex(s)];
        frontier = next & within & ~seen;
        seen |= frontier;
    }
    return seen;
}

std::vector<vertex_set> Graph::components() const {
    std::vector<vertex_set> parts;
    vertex_set rest = vertex_mask();
    while (rest) {
        vertex_set comp = reachable(lowest_vertex(rest), rest);
        parts.push_back(comp);
        rest &= ~comp;
    }
    return parts;
}

int Graph::component_count() const {
    int c = 0;
    vertex_set rest = vertex_mask();
    while (rest) {
        rest &= ~reachable(lowest_vertex(rest), rest);
        ++c;
    }
    return c;
}

int induced_component_count(const Graph& g, vertex_set keep) {
    if (keep & ~g.vertex_mask()) throw std::invalid_argument("vertex set member out of range");
    int c = 0;
    vertex_set rest = keep;
    while (rest) {
        rest &= ~g.reachable(lowest_vertex(rest), rest);
        ++c;
    }
    return c;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_minus_perfect_matching(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("complete_minus_perfect_matching needs even n >= 2");
    Graph g = complete(n);
    for (int v = 0; v < n; v += 2) g.remove_edge(v, v + 1);
    return g;
}

Graph h_graph(int n) {
    if (n < 3 || n % 2 != 1) throw std::invalid_argument("h_graph needs odd n >= 3");
    const Graph base = complete_minus_perfect_matching(n - 1);
    Graph g(n);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (int v = 1; v <= n - 2; ++v) g.add_edge(v, n - 1);
    return g;
}

Graph path_power(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("path_power needs n >= 1, k >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n && v - u <= k; ++v) g.add_edge(u, v);
    return g;
}

Graph clique_with_pendants(int m, std::span<const int> pendants) {
    if (m < 1 || static_cast<int>(pendants.size()) != m)
        throw std::invalid_argument("clique_with_pendants needs m >= 1 hub degrees");
    int n = m;
    for (int p : pendants) {
        if (p < 1) throw std::invalid_argument("each hub needs at least one pendant");
        n += p;
    }
    if (n > 64) throw std::invalid_argument("graph order must be in 0..64");
    Graph g(n);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    int leaf = m;
    for (int hub = 0; hub < m; ++hub)
        for (int p = 0; p < pendants[hub]; ++p) g.add_edge(hub, leaf++);
    return g;
}

Graph clique_with_pendants(int m, std::initializer_list<int> pendants) {
    return clique_with_pendants(m, std::span<const int>(pendants.begin(), pendants.size()));
}

}  // namespace chordal
