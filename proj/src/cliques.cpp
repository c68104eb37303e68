#include "chordal/cliques.hpp"

#include "chordal/errors.hpp"

namespace chordal {

namespace {

struct BronKerbosch {
    const Graph& g;
    const std::function<void(vertex_set)>& sink;
    std::uint64_t budget;

    void run(vertex_set r, vertex_set p, vertex_set x) {
        if (budget-- == 0) throw resource_limit_error("clique enumeration exceeded its node budget");
        if (!p && !x) {
            sink(r);
            return;
        }
        // Pivot on the vertex covering most of P.
        int pivot = -1, best = -1;
        for (vertex_set s = p | x; s; s &= s - 1) {
            const int u = lowest_vertex(s);
            const int cover = popcount(p & g.neighbors(u));
            if (cover > best) {
                best = cover;
                pivot = u;
            }
        }
        for (vertex_set cand = p & ~g.neighbors(pivot); cand; cand &= cand - 1) {
            const int v = lowest_vertex(cand);
            run(r | bit(v), p & g.neighbors(v), x & g.neighbors(v));
            p &= ~bit(v);
            x |= bit(v);
        }
    }
};

}  // namespace

void max_cliques(const Graph& g, const std::function<void(vertex_set)>& sink, std::uint64_t budget) {
    BronKerbosch bk{g, sink, budget};
    bk.run(0, g.vertex_mask(), 0);
}

}  // namespace chordal
