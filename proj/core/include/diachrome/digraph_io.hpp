#ifndef DIACHROME_DIGRAPH_IO_HPP
#define DIACHROME_DIGRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "diachrome/digraph.hpp"

namespace diachrome {

/// Raised on malformed DGR or coloring text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// DGR text format: first non-blank, non-comment line holds the order n;
/// every further such line holds one arc "u v" (0-indexed). Lines starting
/// with '#' are comments.
Digraph parse_dgr(std::istream& in);
Digraph parse_dgr(std::string_view text);
Digraph read_dgr_file(const std::string& path);

/// Serializes with arcs in lexicographic order.
void write_dgr(std::ostream& out, const Digraph& d);
std::string to_dgr(const Digraph& d);

}  // namespace diachrome

#endif
