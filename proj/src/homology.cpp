#include "chordal/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <unordered_set>

#include "chordal/cliques.hpp"
#include "chordal/errors.hpp"

namespace chordal {

using boost::multiprecision::cpp_int;

namespace {

constexpr std::size_t kFaceBudget = std::size_t{1} << 22;

// Rank of a 0/1 matrix over GF(2); columns stored as row-index bitsets.
long long gf2_rank(std::vector<std::vector<std::uint64_t>>& cols, std::size_t rows) {
    std::vector<int> pivot_of_row(rows, -1);
    std::vector<std::vector<std::uint64_t>> basis;
    long long rank = 0;
    for (auto& col : cols) {
        while (true) {
            std::size_t r = rows;
            for (std::size_t w = 0; w < col.size(); ++w)
                if (col[w]) {
                    r = w * 64 + static_cast<std::size_t>(__builtin_ctzll(col[w]));
                    break;
                }
            if (r >= rows) break;  // reduced to zero
            if (pivot_of_row[r] >= 0) {
                const auto& other = basis[pivot_of_row[r]];
                for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= other[w];
                continue;
            }
            pivot_of_row[r] = static_cast<int>(basis.size());
            basis.push_back(col);
            ++rank;
            break;
        }
    }
    return rank;
}

// Fraction-free (Bareiss) elimination; exact rank over Q.
long long bareiss_rank(std::vector<std::vector<cpp_int>>& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    long long rank = 0;
    cpp_int prev = 1;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[piv]);
        auto& prow = a[static_cast<std::size_t>(rank)];
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows; ++i) {
            auto& row = a[i];
            for (std::size_t j = col + 1; j < cols; ++j)
                row[j] = (prow[col] * row[j] - row[col] * prow[j]) / prev;
            row[col] = 0;
        }
        prev = prow[col];
        ++rank;
    }
    return rank;
}

}  // namespace

std::string field_name(Field f) { return f == Field::GF2 ? "gf2" : "q"; }

Field field_from_name(const std::string& name) {
    if (name == "gf2") return Field::GF2;
    if (name == "q") return Field::Q;
    throw std::invalid_argument("unknown field '" + name + "' (expected gf2 or q)");
}

int SimplicialComplex::dim() const {
    if (facets.empty()) return -2;
    int d = -1;
    for (const vertex_set f : facets) d = std::max(d, popcount(f) - 1);
    return d;
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t total = 0;
    for (const auto& level : faces_by_dim()) total += level.size();
    return total;
}

std::vector<std::vector<vertex_set>> SimplicialComplex::faces_by_dim() const {
    std::vector<std::vector<vertex_set>> by_dim(static_cast<std::size_t>(std::max(0, dim() + 1)));
    std::unordered_set<vertex_set> seen;
    for (const vertex_set facet : facets) {
        for (vertex_set s = facet;; s = (s - 1) & facet) {
            if (s && seen.insert(s).second) {
                by_dim[static_cast<std::size_t>(popcount(s) - 1)].push_back(s);
                if (seen.size() > kFaceBudget)
                    throw resource_limit_error("complex face enumeration exceeded its budget");
            }
            if (!s) break;
        }
    }
    for (auto& level : by_dim) std::sort(level.begin(), level.end());
    return by_dim;
}

SimplicialComplex complex_from_faces(int n, std::vector<vertex_set> faces) {
    SimplicialComplex c;
    c.n = n;
    std::sort(faces.begin(), faces.end(),
              [](vertex_set a, vertex_set b) { return popcount(a) > popcount(b) || (popcount(a) == popcount(b) && a < b); });
    for (const vertex_set f : faces) {
        bool dominated = false;
        for (const vertex_set g : c.facets)
            if ((f & g) == f && f != g) {
                dominated = true;
                break;
            }
        if (!dominated && (c.facets.empty() || f != c.facets.back())) c.facets.push_back(f);
    }
    std::sort(c.facets.begin(), c.facets.end());
    c.facets.erase(std::unique(c.facets.begin(), c.facets.end()), c.facets.end());
    return c;
}

SimplicialComplex clique_complex(const Graph& g) {
    SimplicialComplex c;
    c.n = g.order();
    max_cliques(g, [&](vertex_set clique) { c.facets.push_back(clique); });
    std::sort(c.facets.begin(), c.facets.end());
    return c;
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& c, Field f) {
    HomologyRanks out;
    out.field = f;
    out.min_dim = -1;
    if (c.is_void()) return out;  // all ranks zero

    const auto faces = c.faces_by_dim();
    const int top = static_cast<int>(faces.size()) - 1;  // top dimension (-1 if only the empty face)

    // boundary_rank[k] = rank of the boundary map from k-faces, k = 0..top.
    std::vector<long long> boundary_rank(static_cast<std::size_t>(top + 1), 0);
    if (top >= 0) boundary_rank[0] = faces[0].empty() ? 0 : 1;  // all vertices map to the empty face
    for (int k = 1; k <= top; ++k) {
        const auto& rows_faces = faces[k - 1];
        const auto& cols_faces = faces[k];
        const auto row_of = [&](vertex_set face) {
            return static_cast<std::size_t>(
                std::lower_bound(rows_faces.begin(), rows_faces.end(), face) - rows_faces.begin());
        };
        if (f == Field::GF2) {
            const std::size_t words = (rows_faces.size() + 63) / 64;
            std::vector<std::vector<std::uint64_t>> cols(cols_faces.size(),
                                                         std::vector<std::uint64_t>(words, 0));
            for (std::size_t cidx = 0; cidx < cols_faces.size(); ++cidx)
                for (vertex_set s = cols_faces[cidx]; s; s &= s - 1) {
                    const std::size_t r = row_of(cols_faces[cidx] & ~(s & -s));
                    cols[cidx][r / 64] ^= std::uint64_t{1} << (r % 64);
                }
            boundary_rank[k] = gf2_rank(cols, rows_faces.size());
        } else {
            if (rows_faces.size() * cols_faces.size() > (std::size_t{1} << 22))
                throw resource_limit_error("rational boundary matrix too large for exact elimination");
            std::vector<std::vector<cpp_int>> m(rows_faces.size(),
                                                std::vector<cpp_int>(cols_faces.size(), 0));
            for (std::size_t cidx = 0; cidx < cols_faces.size(); ++cidx) {
                int sign = 1;
                for (vertex_set s = cols_faces[cidx]; s; s &= s - 1) {
                    const std::size_t r = row_of(cols_faces[cidx] & ~(s & -s));
                    m[r][cidx] = sign;
                    sign = -sign;
                }
            }
            boundary_rank[k] = bareiss_rank(m);
        }
    }

    out.ranks.assign(static_cast<std::size_t>(top + 2), 0);
    const auto f_count = [&](int k) -> long long {
        return k == -1 ? 1 : static_cast<long long>(faces[static_cast<std::size_t>(k)].size());
    };
    const auto d_rank = [&](int k) -> long long {
        return (k >= 0 && k <= top) ? boundary_rank[static_cast<std::size_t>(k)] : 0;
    };
    for (int k = -1; k <= top; ++k) out.ranks[static_cast<std::size_t>(k + 1)] = f_count(k) - d_rank(k) - d_rank(k + 1);

    if (f == Field::Q) {
        // Reduced Euler characteristic must match the alternating face count.
        long long lhs = 0, rhs = -1;
        for (int k = -1; k <= top; ++k) lhs += (k % 2 == 0 ? 1 : -1) * out.rank(k);
        for (int k = 0; k <= top; ++k) rhs += (k % 2 == 0 ? 1 : -1) * f_count(k);
        if (lhs != rhs) throw std::logic_error("Euler characteristic mismatch in homology computation");
    }
    return out;
}

}  // namespace chordal
