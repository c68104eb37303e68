#include "chordal/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chordal/errors.hpp"

namespace chordal {

int ceil_two_sqrt_minus_two(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    // ceil(2*sqrt(n)) via the integer square root of 4n.
    const long long m = 4LL * n;
    long long t = static_cast<long long>(std::sqrt(static_cast<double>(m)));
    while (t * t > m) --t;
    while ((t + 1) * (t + 1) <= m) ++t;
    return static_cast<int>(t * t == m ? t : t + 1) - 2;
}

int kappa_upper_bound(int n) { return (n - 1) - ceil_two_sqrt_minus_two(n); }

bool is_universal(const Graph& g, int v) {
    if (g.order() < 1) throw std::invalid_argument("universal vertex needs n >= 1");
    return g.degree(v) == g.order() - 1;
}

bool has_universal_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return true;
    return false;
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

std::vector<int> lex_bfs_order(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> buckets;
    if (n > 0) {
        buckets.emplace_back();
        for (int v = 0; v < n; ++v) buckets.front().push_back(v);
    }
    std::vector<int> order;
    order.reserve(n);
    while (!buckets.empty()) {
        const int v = buckets.front().front();
        order.push_back(v);
        const vertex_set nb = g.neighbors(v);
        std::vector<std::vector<int>> next;
        for (const auto& bucket : buckets) {
            std::vector<int> in, out;
            for (int u : bucket) {
                if (u == v) continue;
                ((nb >> u & 1) ? in : out).push_back(u);
            }
            if (!in.empty()) next.push_back(std::move(in));
            if (!out.empty()) next.push_back(std::move(out));
        }
        buckets = std::move(next);
    }
    return order;
}

namespace {

// Chordless cycle search: for a hole to exist there must be a vertex v with
// non-adjacent neighbors x, y joined by a path avoiding the rest of N[v];
// the shortest such path closes an induced cycle of length >= 4 through v.
std::vector<int> find_hole(const Graph& g) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        const vertex_set nb = g.neighbors(v);
        for (vertex_set xs = nb; xs; xs &= xs - 1) {
            const int x = lowest_vertex(xs);
            for (vertex_set ys = xs & (xs - 1); ys; ys &= ys - 1) {
                const int y = lowest_vertex(ys);
                if (g.has_edge(x, y)) continue;
                const vertex_set blocked = (nb | bit(v)) & ~bit(x) & ~bit(y);
                const vertex_set allowed = g.vertex_mask() & ~blocked;
                // BFS from x to y inside `allowed`.
                std::vector<int> parent(static_cast<std::size_t>(n), -1);
                parent[x] = x;
                std::vector<int> queue{x};
                for (std::size_t head = 0; head < queue.size() && parent[y] < 0; ++head) {
                    const int u = queue[head];
                    for (vertex_set s = g.neighbors(u) & allowed; s; s &= s - 1) {
                        const int w = lowest_vertex(s);
                        if (parent[w] >= 0) continue;
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
                if (parent[y] < 0) continue;
                std::vector<int> cycle{v};
                std::vector<int> tail;
                for (int u = y; u != x; u = parent[u]) tail.push_back(u);
                cycle.push_back(x);
                cycle.insert(cycle.end(), tail.rbegin(), tail.rend());
                return cycle;
            }
        }
    }
    return {};
}

}  // namespace

ChordalityResult chordality(const Graph& g) {
    const int n = g.order();
    ChordalityResult res;
    const std::vector<int> visit = lex_bfs_order(g);
    std::vector<int> peo(visit.rbegin(), visit.rend());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    for (int i = 0; i < n; ++i) {
        const int v = peo[i];
        vertex_set later = 0;
        for (vertex_set s = g.neighbors(v); s; s &= s - 1) {
            const int u = lowest_vertex(s);
            if (pos[u] > i) later |= bit(u);
        }
        for (vertex_set s = later; s; s &= s - 1) {
            const int u = lowest_vertex(s);
            if ((later & ~bit(u)) & ~g.neighbors(u)) {
                res.chordal = false;
                res.hole = find_hole(g);
                return res;
            }
        }
    }
    res.chordal = true;
    res.elimination_order = std::move(peo);
    return res;
}

bool is_chordal(const Graph& g) { return chordality(g).chordal; }

bool is_chordal_star(const Graph& g) {
    return g.order() > 0 && !has_universal_vertex(g) && is_chordal(g);
}

bool is_gapfree(const Graph& g) {
    if (!g.connected()) return false;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [u, v] = edges[i];
            const auto [x, y] = edges[j];
            if (u == x || u == y || v == x || v == y) continue;
            if (!(g.has_edge(u, x) || g.has_edge(u, y) || g.has_edge(v, x) || g.has_edge(v, y)))
                return false;
        }
    return true;
}

namespace {

// Internally vertex-disjoint s-t paths: unit max-flow on the split digraph
// (v_in -> v_out arcs of capacity one, each edge as two unit arcs).
int st_vertex_flow(const Graph& g, int s, int t) {
    const int n = g.order();
    const int nodes = 2 * n;
    const auto in = [](int v) { return 2 * v; };
    const auto out = [](int v) { return 2 * v + 1; };
    std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
    const auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
    for (int v = 0; v < n; ++v) at(in(v), out(v)) = 1;
    for (auto [u, v] : g.edges()) {
        at(out(u), in(v)) = 1;
        at(out(v), in(u)) = 1;
    }
    const int source = out(s), sink = in(t);
    int flow = 0;
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    while (true) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[source] = source;
        std::vector<int> queue{source};
        for (std::size_t head = 0; head < queue.size() && parent[sink] < 0; ++head) {
            const int a = queue[head];
            for (int b = 0; b < nodes; ++b)
                if (parent[b] < 0 && at(a, b) > 0) {
                    parent[b] = a;
                    queue.push_back(b);
                }
        }
        if (parent[sink] < 0) break;
        for (int b = sink; b != source; b = parent[b]) {
            --at(parent[b], b);
            ++at(b, parent[b]);
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("vertex connectivity needs n >= 1");
    if (!g.connected()) return 0;
    if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, st_vertex_flow(g, s, t));
    return best;
}

int vertex_connectivity_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("vertex connectivity needs n >= 1");
    if (n > 10) throw unsupported_error("brute-force connectivity supports n <= 10");
    const vertex_set all = g.vertex_mask();
    for (int k = 0; k + 2 <= n; ++k) {
        // All removal sets of size k.
        vertex_set w = (vertex_set{1} << k) - 1;
        while (true) {
            if (induced_component_count(g, all & ~w) >= 2) return k;
            if (k == 0) break;
            // Gosper's hack: next k-subset.
            const vertex_set c = w & -w, r = w + c;
            w = (((r ^ w) >> 2) / c) | r;
            if (w & ~all) break;
        }
    }
    return n - 1;
}

TauMaxResult tau_max(const Graph& g, std::uint64_t budget) {
    const Graph comp = g.complement();
    int min_size = g.order() + 1;
    vertex_set min_set = 0;
    max_cliques(
        comp,
        [&](vertex_set clique) {
            const int size = popcount(clique);
            if (size < min_size) {
                min_size = size;
                min_set = clique;
            }
        },
        budget);
    TauMaxResult res;
    res.value = g.order() - min_size;
    res.witness_cover = g.vertex_mask() & ~min_set;
    return res;
}

UniversalReduction universal_vertex_reduction(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("universal reduction needs n >= 1");
    UniversalReduction res{g, 0};
    while (res.core.order() > 1) {
        int universal = -1;
        for (int v = 0; v < res.core.order(); ++v)
            if (res.core.degree(v) == res.core.order() - 1) {
                universal = v;
                break;
            }
        if (universal < 0) break;
        res.core = res.core.induced(res.core.vertex_mask() & ~bit(universal));
        ++res.stripped;
    }
    return res;
}

double algebraic_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("algebraic connectivity needs n >= 2");
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    const auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int v = 0; v < n; ++v) at(v, v) = g.degree(v);
    for (auto [u, v] : g.edges()) {
        at(u, v) = -1.0;
        at(v, u) = -1.0;
    }
    // Cyclic Jacobi; stop once the off-diagonal Frobenius norm is < 1e-12.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) eig[v] = at(v, v);
    std::sort(eig.begin(), eig.end());
    return std::max(0.0, eig[1]);
}

}  // namespace chordal
