#ifndef CHORDAL_ERRORS_HPP
#define CHORDAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chordal {

// Malformed graph6 input; offset is the byte position of the first bad byte.
struct graph6_error : std::runtime_error {
    graph6_error(const std::string& what, std::size_t offset_)
        : std::runtime_error(what + " (byte " + std::to_string(offset_) + ")"),
          offset(offset_) {}
    std::size_t offset;
};

// Operation asked for an input size the implementation does not support.
struct unsupported_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A work budget (clique-enumeration nodes, canonical search frontier) ran out.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The construction ladder was exhausted without producing a verified graph.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace chordal

#endif
