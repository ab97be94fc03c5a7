#include "diachrome/digraph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace diachrome {

namespace {

bool skippable(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Digraph parse_dgr(std::istream& in) {
    std::string line;
    int line_no = 0;
    long n = -1;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 0) {
                throw ParseError("line " + std::to_string(line_no) + ": expected vertex count");
            }
        } else {
            long u, v;
            if (!(fields >> u >> v)) {
                throw ParseError("line " + std::to_string(line_no) + ": expected arc \"u v\"");
            }
            arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        std::string trailing;
        if (fields >> trailing) {
            throw ParseError("line " + std::to_string(line_no) + ": unexpected trailing token");
        }
    }
    if (n < 0) throw ParseError("empty input: expected vertex count");
    try {
        return Digraph(static_cast<int>(n), arcs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Digraph parse_dgr(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dgr(in);
}

Digraph read_dgr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_dgr(in);
}

void write_dgr(std::ostream& out, const Digraph& d) {
    out << d.order() << '\n';
    for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

std::string to_dgr(const Digraph& d) {
    std::ostringstream out;
    write_dgr(out, d);
    return out.str();
}

}  // namespace diachrome
