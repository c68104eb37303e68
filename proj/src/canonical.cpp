#include "chordal/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "chordal/errors.hpp"
#include "chordal/graph6.hpp"

namespace chordal {

namespace {

constexpr int kMaxCanonOrder = 16;
constexpr std::size_t kFrontierCap = std::size_t{1} << 21;

// Dense adjacency for the canonical search.
struct SmallGraph {
    int n = 0;
    std::array<std::uint16_t, kMaxCanonOrder> adj{};
};

SmallGraph to_small(const Graph& g) {
    SmallGraph s;
    s.n = g.order();
    for (int v = 0; v < s.n; ++v) s.adj[v] = static_cast<std::uint16_t>(g.neighbors(v));
    return s;
}

// Partial ordering. seq[0..placed-1] are the chosen vertices; rev[v] holds
// v's adjacency to the placed positions packed MSB-first (position i at bit
// 15-i), so integer comparison of rev[v] is lexicographic comparison of the
// next emitted column.
struct Node {
    std::array<std::uint8_t, kMaxCanonOrder> seq;
    std::array<std::uint16_t, kMaxCanonOrder> rev;
    std::uint16_t used;
};

// Two nodes with the same used set and the same position-adjacency profile
// on the unused vertices generate identical continuations; keep one.
bool node_key_less(const Node& a, const Node& b) {
    if (a.used != b.used) return a.used < b.used;
    return a.rev < b.rev;  // rev of used vertices is equalized before sorting
}

bool node_key_eq(const Node& a, const Node& b) { return a.used == b.used && a.rev == b.rev; }

std::vector<int> canonical_ordering_small(const SmallGraph& g) {
    const int n = g.n;
    if (n <= 1) return n == 1 ? std::vector<int>{0} : std::vector<int>{};

    thread_local std::vector<Node> frontier, next;
    frontier.clear();
    for (int v = 0; v < n; ++v) {
        Node node;
        node.seq.fill(0);
        node.rev.fill(0);
        node.seq[0] = static_cast<std::uint8_t>(v);
        node.used = static_cast<std::uint16_t>(1u << v);
        for (int u = 0; u < n; ++u)
            if (g.adj[v] >> u & 1) node.rev[u] |= 1u << 15;  // adjacency to position 0
        frontier.push_back(node);
    }

    for (int k = 1; k < n; ++k) {
        std::uint32_t best = ~0u;
        for (const Node& node : frontier)
            for (std::uint16_t rest = static_cast<std::uint16_t>(~node.used & ((1u << n) - 1)); rest;
                 rest &= rest - 1) {
                const int v = __builtin_ctz(rest);
                if (node.rev[v] < best) best = node.rev[v];
            }
        next.clear();
        for (const Node& node : frontier)
            for (std::uint16_t rest = static_cast<std::uint16_t>(~node.used & ((1u << n) - 1)); rest;
                 rest &= rest - 1) {
                const int v = __builtin_ctz(rest);
                if (node.rev[v] != best) continue;
                Node child = node;
                child.seq[k] = static_cast<std::uint8_t>(v);
                child.used |= static_cast<std::uint16_t>(1u << v);
                child.rev[v] = 0;
                const std::uint16_t nb = g.adj[v];
                const std::uint16_t posbit = static_cast<std::uint16_t>(1u << (15 - k));
                for (std::uint16_t rest2 = static_cast<std::uint16_t>(~child.used & ((1u << n) - 1));
                     rest2; rest2 &= rest2 - 1) {
                    const int u = __builtin_ctz(rest2);
                    if (nb >> u & 1) child.rev[u] |= posbit;
                }
                next.push_back(child);
                if (next.size() > kFrontierCap)
                    throw resource_limit_error("canonical search frontier exceeded its budget");
            }
        if (next.size() > 8) {
            std::sort(next.begin(), next.end(), node_key_less);
            next.erase(std::unique(next.begin(), next.end(), node_key_eq), next.end());
        }
        frontier.swap(next);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = frontier.front().seq[i];
    return order;
}

SmallGraph apply_order(const SmallGraph& g, const std::vector<int>& order) {
    SmallGraph out;
    out.n = g.n;
    std::array<int, kMaxCanonOrder> pos{};
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    for (int i = 0; i < g.n; ++i) {
        std::uint16_t row = 0;
        for (std::uint16_t rest = g.adj[order[i]]; rest; rest &= rest - 1)
            row |= static_cast<std::uint16_t>(1u << pos[__builtin_ctz(rest)]);
        out.adj[i] = row;
    }
    return out;
}

// Upper triangle in graph6 stream order, packed from the top bit down, so
// numeric order equals lexicographic order on the bit string. n <= 9.
std::uint64_t pack_code(const SmallGraph& g) {
    std::uint64_t code = 0;
    int t = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (g.adj[i] >> j & 1) code |= std::uint64_t{1} << (63 - t);
    return code;
}

SmallGraph unpack_code(int n, std::uint64_t code) {
    SmallGraph g;
    g.n = n;
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (code >> (63 - t) & 1) {
                g.adj[i] |= static_cast<std::uint16_t>(1u << j);
                g.adj[j] |= static_cast<std::uint16_t>(1u << i);
            }
    return g;
}

std::uint64_t canonical_code(const SmallGraph& g) {
    return pack_code(apply_order(g, canonical_ordering_small(g)));
}

Graph to_graph(const SmallGraph& s) {
    Graph g(s.n);
    for (int v = 0; v < s.n; ++v)
        for (std::uint16_t rest = s.adj[v]; rest; rest &= rest - 1) {
            const int u = __builtin_ctz(rest);
            if (u > v) g.add_edge(v, u);
        }
    return g;
}

void check_canon_order(const Graph& g) {
    if (g.order() > kMaxCanonOrder)
        throw unsupported_error("canonical form supports n <= 16, got n = " + std::to_string(g.order()));
}

// One extension level: every parent class on k-1 vertices gains a k-th
// vertex attached to each neighbor subset; children dedup by canonical code.
void extend_level(int k, const std::vector<std::uint64_t>& parents, std::size_t begin, std::size_t end,
                  std::unordered_set<std::uint64_t>& seen) {
    for (std::size_t p = begin; p < end; ++p) {
        const SmallGraph base = unpack_code(k - 1, parents[p]);
        for (std::uint32_t sub = 0; sub < (1u << (k - 1)); ++sub) {
            SmallGraph child = base;
            child.n = k;
            child.adj[k - 1] = static_cast<std::uint16_t>(sub);
            for (std::uint32_t rest = sub; rest; rest &= rest - 1)
                child.adj[__builtin_ctz(rest)] |= static_cast<std::uint16_t>(1u << (k - 1));
            seen.insert(canonical_code(child));
        }
    }
}

// Levels build on each other and never change; keep every computed level so
// repeated corpus runs pay for the sweep once per process.
const std::vector<std::uint64_t>& enumerate_codes(int n) {
    if (n < 1 || n > 9) throw unsupported_error("built-in enumeration supports 1 <= n <= 9");
    static std::mutex cache_mutex;
    static std::map<int, std::vector<std::uint64_t>> cache{{1, {0}}};  // the one-vertex graph
    std::lock_guard<std::mutex> lock(cache_mutex);
    int start = 1;
    for (const auto& [k, level] : cache)
        if (k <= n) start = k;
    std::vector<std::uint64_t> codes = cache.at(start);
    for (int k = start + 1; k <= n; ++k) {
        const unsigned workers =
            codes.size() >= 4096 ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
        std::vector<std::unordered_set<std::uint64_t>> partial(workers);
        if (workers == 1) {
            partial[0].reserve(codes.size() * 16);
            extend_level(k, codes, 0, codes.size(), partial[0]);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                const std::size_t begin = codes.size() * w / workers;
                const std::size_t end = codes.size() * (w + 1) / workers;
                partial[w].reserve(codes.size() * 16 / workers);
                pool.emplace_back(extend_level, k, std::cref(codes), begin, end, std::ref(partial[w]));
            }
            for (auto& t : pool) t.join();
        }
        std::size_t total = 0;
        for (const auto& s : partial) total += s.size();
        codes.clear();
        codes.reserve(total);
        for (const auto& s : partial) codes.insert(codes.end(), s.begin(), s.end());
        std::sort(codes.begin(), codes.end());
        codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        cache[k] = codes;
    }
    return cache.at(n);
}

}  // namespace

Graph relabeled(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    Graph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

std::vector<int> canonical_ordering(const Graph& g) {
    check_canon_order(g);
    return canonical_ordering_small(to_small(g));
}

Graph canonical_relabel(const Graph& g) {
    check_canon_order(g);
    return to_graph(apply_order(to_small(g), canonical_ordering_small(to_small(g))));
}

CanonicalForm canonical_form(const Graph& g) { return write_graph6(canonical_relabel(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_relabel(a) == canonical_relabel(b);
}

std::vector<Graph> enumerate_graphs(int n) {
    std::vector<Graph> out;
    for (const std::uint64_t code : enumerate_codes(n)) out.push_back(to_graph(unpack_code(n, code)));
    return out;
}

void enumerate_graphs(int n, const std::function<void(const Graph&)>& sink) {
    for (const std::uint64_t code : enumerate_codes(n)) sink(to_graph(unpack_code(n, code)));
}

std::size_t count_graph_classes(int n) { return enumerate_codes(n).size(); }

}  // namespace chordal
