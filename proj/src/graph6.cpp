#include "chordal/graph6.hpp"

#include <fstream>

#include "chordal/errors.hpp"

namespace chordal {

namespace {

constexpr int kBias = 63;      // printable offset
constexpr int kMaxByte = 126;  // '~'

bool valid_byte(char c) { return c >= kBias && c <= kMaxByte; }

// Reads the N(n) size header; advances pos.
std::uint64_t parse_order(std::string_view text, std::size_t& pos) {
    if (pos >= text.size()) throw graph6_error("empty graph6 string", pos);
    if (!valid_byte(text[pos])) throw graph6_error("illegal header byte", pos);
    if (text[pos] != '~') return static_cast<std::uint64_t>(text[pos++] - kBias);
    ++pos;
    int bytes = 3;
    if (pos < text.size() && text[pos] == '~') {
        ++pos;
        bytes = 6;
    }
    std::uint64_t n = 0;
    for (int i = 0; i < bytes; ++i, ++pos) {
        if (pos >= text.size()) throw graph6_error("truncated size header", pos);
        if (!valid_byte(text[pos])) throw graph6_error("illegal header byte", pos);
        n = (n << 6) | static_cast<std::uint64_t>(text[pos] - kBias);
    }
    return n;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    const std::uint64_t n64 = parse_order(text, pos);
    if (n64 > 64) throw unsupported_error("graph6 order " + std::to_string(n64) + " exceeds the supported 64");
    const int n = static_cast<int>(n64);
    Graph g(n);
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() < pos + nbytes) throw graph6_error("body shorter than n(n-1)/2 bits", text.size());
    if (text.size() > pos + nbytes) throw graph6_error("trailing bytes after graph body", pos + nbytes);

    std::size_t k = 0;  // bit cursor over pairs (0,1),(0,2),(1,2),(0,3),...
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const char c = text[pos + k / 6];
            if (!valid_byte(c)) throw graph6_error("illegal body byte", pos + k / 6);
            if ((c - kBias) >> (5 - k % 6) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    for (; k < nbytes * 6; ++k) {
        const char c = text[pos + k / 6];
        if (!valid_byte(c)) throw graph6_error("illegal body byte", pos + k / 6);
        if ((c - kBias) >> (5 - k % 6) & 1) throw graph6_error("nonzero padding bit", pos + k / 6);
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::vector<Graph> graphs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view = line;
        if (lineno == 1 && view.starts_with(">>graph6<<")) view.remove_prefix(10);
        if (view.empty()) continue;
        try {
            graphs.push_back(parse_graph6(view));
        } catch (const graph6_error& e) {
            throw graph6_error(path + ":" + std::to_string(lineno) + ": " + e.what(), e.offset);
        }
    }
    return graphs;
}

}  // namespace chordal
