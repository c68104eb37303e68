#include "chordal/betti.hpp"

#include <stdexcept>
#include <string>

#include "chordal/errors.hpp"
#include "chordal/invariants.hpp"

namespace chordal {

namespace {

constexpr int kMaxHochsterOrder = 16;

void check_sweep_order(const Graph& g, const char* what) {
    if (g.order() > kMaxHochsterOrder)
        throw unsupported_error(std::string(what) + " supports n <= 16, got n = " + std::to_string(g.order()));
}

// Iterates all nonempty subsets of the vertex set grouped by size, smallest
// sizes first, so the linear strand fills monotonically.
template <typename F>
void for_each_subset_by_size(int n, F&& fn) {
    for (int j = 1; j <= n; ++j) {
        vertex_set w = (vertex_set{1} << j) - 1;
        const vertex_set limit = vertex_set{1} << n;
        while (true) {
            fn(j, w);
            const vertex_set c = w & -w, r = w + c;
            const vertex_set next = (((r ^ w) >> 2) / c) | r;
            if (next >= limit || next < w) break;
            w = next;
        }
    }
}

}  // namespace

BettiTable betti_table_hochster(const Graph& g, Field f) {
    check_sweep_order(g, "hochster betti table");
    BettiTable table;
    table.n = g.order();
    table.field = f;
    table.entries[{0, 0}] = 1;
    for_each_subset_by_size(g.order(), [&](int j, vertex_set w) {
        const HomologyRanks ranks = reduced_homology_ranks(clique_complex(g.induced(w)), f);
        for (int d = 0; d < j; ++d) {
            const long long r = ranks.rank(d);
            if (r > 0) table.entries[{j - d - 1, j}] += r;
        }
    });
    return table;
}

std::vector<long long> linear_strand_chordal(const Graph& g) {
    if (!is_chordal(g)) throw std::invalid_argument("linear strand fast path requires a chordal graph");
    check_sweep_order(g, "linear strand");
    std::vector<long long> strand(static_cast<std::size_t>(std::max(1, g.order())), 0);
    for_each_subset_by_size(g.order(), [&](int j, vertex_set w) {
        if (j < 2 || j > g.order()) return;
        strand[static_cast<std::size_t>(j - 1)] += induced_component_count(g, w) - 1;
    });
    return strand;
}

int proj_dim(const BettiTable& t) {
    int pd = 0;
    for (const auto& [key, value] : t.entries)
        if (key.first >= 1 && value != 0) pd = std::max(pd, key.first);
    return pd;
}

bool has_linear_resolution(const BettiTable& t) {
    for (const auto& [key, value] : t.entries)
        if (key.first >= 1 && value != 0 && key.second != key.first + 1) return false;
    return true;
}

int kappa_via_betti(const Graph& g, Field f) {
    const int n = g.order();
    if (n < 2) throw std::domain_error("betti connectivity needs n >= 2");
    if (!is_chordal_star(g))
        throw std::domain_error("betti connectivity is only claimed for chordal graphs without universal vertices");
    check_sweep_order(g, "betti connectivity");
    // Linear strand through the homology engine: only H~_0 of the induced
    // clique complexes contributes to degrees j = i + 1, and H~_0 is already
    // determined by the 1-skeleton.
    std::vector<long long> strand(static_cast<std::size_t>(n + 1), 0);
    for_each_subset_by_size(n, [&](int j, vertex_set w) {
        const Graph h = g.induced(w);
        std::vector<vertex_set> faces;
        for (int v = 0; v < h.order(); ++v) faces.push_back(bit(v));
        for (const auto& [u, v] : h.edges()) faces.push_back(bit(u) | bit(v));
        const HomologyRanks ranks = reduced_homology_ranks(complex_from_faces(h.order(), faces), f);
        strand[static_cast<std::size_t>(j - 1)] += ranks.rank(0);
    });
    for (int i = n - 1; i >= 1; --i)
        if (strand[static_cast<std::size_t>(n - i)] == 0) return i;
    return 0;
}

ProjdimIdentity check_projdim_kappa_identity(const Graph& g, Field f) {
    if (!is_chordal_star(g))
        throw std::domain_error("projdim identity is only claimed for chordal graphs without universal vertices");
    ProjdimIdentity res;
    res.n_minus_kappa = g.order() - vertex_connectivity(g);
    res.projdim_plus_one = proj_dim(betti_table_hochster(g, f)) + 1;
    res.holds = res.n_minus_kappa == res.projdim_plus_one;
    return res;
}

}  // namespace chordal
