#ifndef CHORDAL_GRAPH6_HPP
#define CHORDAL_GRAPH6_HPP

#include <string>
#include <string_view>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

// Standard graph6 line (no trailing newline). Throws graph6_error with the
// byte offset of the problem; orders above 64 are rejected as unsupported.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One graph per line; tolerates a leading ">>graph6<<" header and blank
// lines. Parse failures are rethrown with the 1-based line number.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace chordal

#endif
