#include "chordal/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "chordal/errors.hpp"
#include "chordal/invariants.hpp"

namespace chordal {

namespace {

bool verified(const Graph& g, int n, int kappa) {
    if (g.order() != n) return false;
    if (!is_chordal_star(g)) return false;
    if (vertex_connectivity(g) != kappa) return false;
    if (n <= 10 && vertex_connectivity_bruteforce(g) != kappa) return false;
    return true;
}

// kappa units spread over `slots` entries, each in 1..cap, largest first.
std::vector<int> spread(int total, int slots, int cap) {
    std::vector<int> parts(static_cast<std::size_t>(slots), total / slots);
    for (int i = 0; i < total % slots; ++i) ++parts[static_cast<std::size_t>(i)];
    for (int p : parts)
        if (p < 1 || p > cap) return {};
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

Graph disconnected_path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 2 < n; ++v) g.add_edge(v, v + 1);  // path on 0..n-2, vertex n-1 isolated
    return g;
}

Graph random_chordal_star_search(int n, int kappa, std::uint64_t seed, ConstructionRecipe& recipe) {
    std::mt19937_64 rng(seed);
    Graph g = path(n);  // chordal* start with kappa 1
    int current = vertex_connectivity(g);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int step = 0; step < 200000; ++step) {
        if (current == kappa) break;
        const int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        Graph candidate = g;
        if (candidate.has_edge(u, v))
            candidate.remove_edge(u, v);
        else
            candidate.add_edge(u, v);
        if (!is_chordal_star(candidate)) continue;
        const int ck = vertex_connectivity(candidate);
        if (std::abs(ck - kappa) <= std::abs(current - kappa)) {
            g = std::move(candidate);
            current = ck;
        }
    }
    if (current != kappa) throw construction_error("local search did not reach the requested connectivity");
    recipe.family = ConstructionRecipe::Family::searched;
    recipe.params = {static_cast<int>(seed & 0xffffffff), static_cast<int>(seed >> 32)};
    return g;
}

}  // namespace

std::string family_name(ConstructionRecipe::Family f) {
    switch (f) {
        case ConstructionRecipe::Family::disconnected_path: return "disconnected_path";
        case ConstructionRecipe::Family::complement_clique_pendants: return "complement_clique_pendants";
        case ConstructionRecipe::Family::path_power: return "path_power";
        case ConstructionRecipe::Family::searched: return "searched";
    }
    return "unknown";
}

Construction construct_chordal_star(int n, int kappa, std::uint64_t seed) {
    if (n < 4) throw std::domain_error("constructions need n >= 4");
    const int bound = kappa_upper_bound(n);
    if (kappa < 0 || kappa > bound)
        throw std::domain_error("kappa " + std::to_string(kappa) + " outside the admissible 0.." +
                                std::to_string(bound));
    Construction out;
    out.recipe.target_n = n;
    out.recipe.target_kappa = kappa;

    if (kappa == 0) {
        Graph g = disconnected_path_graph(n);
        if (verified(g, n, kappa)) {
            out.graph = g;
            out.recipe.family = ConstructionRecipe::Family::disconnected_path;
            out.recipe.params = {n};
            return out;
        }
    }

    if (kappa >= 1 && kappa <= (n - 2) / 2) {
        Graph g = path_power(n, kappa);
        if (verified(g, n, kappa)) {
            out.graph = std::move(g);
            out.recipe.family = ConstructionRecipe::Family::path_power;
            out.recipe.params = {n, kappa};
            return out;
        }
    }

    for (int m = 2; 2 * m <= n; ++m) {
        // Want (n - m) - max(p) = kappa with pendant counts p_1..p_m >= 1.
        const int top = n - m - kappa;
        if (top < 1 || kappa < m - 1 || kappa > (m - 1) * top) continue;
        std::vector<int> pendants = spread(kappa, m - 1, top);
        if (pendants.empty()) continue;
        pendants.insert(pendants.begin(), top);
        Graph g = clique_with_pendants(m, pendants).complement();
        if (verified(g, n, kappa)) {
            out.graph = std::move(g);
            out.recipe.family = ConstructionRecipe::Family::complement_clique_pendants;
            out.recipe.params.assign(1, m);
            out.recipe.params.insert(out.recipe.params.end(), pendants.begin(), pendants.end());
            return out;
        }
    }

    Graph g = random_chordal_star_search(n, kappa, seed, out.recipe);
    if (!verified(g, n, kappa)) throw construction_error("search result failed oracle verification");
    out.graph = std::move(g);
    return out;
}

Graph extremal_candidate(int n) {
    int s = 2;
    while (s * s < n) ++s;
    if (s * s != n || n < 4) throw std::domain_error("extremal candidate needs a perfect square n >= 4");
    const std::vector<int> pendants(static_cast<std::size_t>(s), s - 1);
    Graph g = clique_with_pendants(s, pendants).complement();
    const int target = (n - 1) - (2 * s - 2);
    if (!is_chordal_star(g) || vertex_connectivity(g) != target)
        throw construction_error("extremal candidate failed oracle verification");
    return g;
}

Graph realize(const ConstructionRecipe& recipe) {
    switch (recipe.family) {
        case ConstructionRecipe::Family::disconnected_path:
            if (recipe.params.size() != 1) throw std::invalid_argument("disconnected_path takes params [n]");
            return disconnected_path_graph(recipe.params[0]);
        case ConstructionRecipe::Family::path_power:
            if (recipe.params.size() != 2) throw std::invalid_argument("path_power takes params [n, k]");
            return path_power(recipe.params[0], recipe.params[1]);
        case ConstructionRecipe::Family::complement_clique_pendants: {
            if (recipe.params.size() < 2)
                throw std::invalid_argument("complement_clique_pendants takes params [m, p_1..p_m]");
            const int m = recipe.params[0];
            const std::vector<int> pendants(recipe.params.begin() + 1, recipe.params.end());
            return clique_with_pendants(m, pendants).complement();
        }
        case ConstructionRecipe::Family::searched: {
            if (recipe.params.size() != 2) throw std::invalid_argument("searched takes params [seed_lo, seed_hi]");
            const std::uint64_t seed = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(recipe.params[1])) << 32) |
                                       static_cast<std::uint32_t>(recipe.params[0]);
            ConstructionRecipe scratch;
            return random_chordal_star_search(recipe.target_n, recipe.target_kappa, seed, scratch);
        }
    }
    throw std::invalid_argument("unknown construction family");
}

std::vector<Construction> kappa_spectrum(int n, std::uint64_t seed) {
    if (n < 4) throw std::domain_error("spectrum needs n >= 4");
    std::vector<Construction> out;
    std::string failures;
    for (int kappa = 0; kappa <= kappa_upper_bound(n); ++kappa) {
        try {
            out.push_back(construct_chordal_star(n, kappa, seed));
        } catch (const construction_error& e) {
            failures += (failures.empty() ? "" : "; ") + std::to_string(kappa) + ": " + e.what();
        }
    }
    if (!failures.empty()) throw construction_error("spectrum incomplete at kappa " + failures);
    return out;
}

}  // namespace chordal
