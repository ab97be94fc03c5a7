#include "diachrome/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "diachrome/digraph_io.hpp"

namespace diachrome {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
    if (colors_.empty()) throw std::invalid_argument("coloring must cover at least one vertex");
    k_ = *std::max_element(colors_.begin(), colors_.end());
    if (k_ < 1) throw std::invalid_argument("colors must be positive");
    std::vector<char> used(k_ + 1, 0);
    for (int c : colors_) {
        if (c < 1 || c > k_) throw std::invalid_argument("color out of range");
        used[c] = 1;
    }
    for (int c = 1; c <= k_; ++c) {
        if (!used[c]) {
            throw std::invalid_argument("coloring not surjective: color " +
                                        std::to_string(c) + " unused");
        }
    }
}

std::vector<VertexSet> Coloring::chromatic_classes() const {
    std::vector<VertexSet> classes(k_, VertexSet(size()));
    for (int v = 0; v < size(); ++v) classes[colors_[v] - 1].add(v);
    return classes;
}

namespace {

// Kahn peeling restricted to one chromatic class.
bool class_is_acyclic(const Digraph& d, const VertexSet& cls) {
    std::vector<int> indeg(d.order(), 0);
    std::vector<int> stack;
    int members = 0;
    cls.for_each([&](int v) {
        indeg[v] = d.in_neighbors(v).intersection_size(cls);
        ++members;
        if (indeg[v] == 0) stack.push_back(v);
    });
    int removed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++removed;
        VertexSet succ = d.out_neighbors(v) & cls;
        succ.for_each([&](int w) {
            if (--indeg[w] == 0) stack.push_back(w);
        });
    }
    return removed == members;
}

void require_covers(const Digraph& d, const Coloring& c) {
    if (c.size() != d.order()) {
        throw std::invalid_argument("coloring covers " + std::to_string(c.size()) +
                                    " vertices, digraph has " + std::to_string(d.order()));
    }
}

// k*k seen-matrix over one pass of the arcs.
std::vector<char> pair_matrix(const Digraph& d, const Coloring& c) {
    const int k = c.color_count();
    std::vector<char> seen(static_cast<std::size_t>(k) * k, 0);
    for (const auto& [u, v] : d.arcs()) {
        seen[static_cast<std::size_t>(c.color_of(u) - 1) * k + (c.color_of(v) - 1)] = 1;
    }
    return seen;
}

}  // namespace

bool is_acyclic_coloring(const Digraph& d, const Coloring& c) {
    require_covers(d, c);
    for (const VertexSet& cls : c.chromatic_classes()) {
        if (!class_is_acyclic(d, cls)) return false;
    }
    return true;
}

bool is_complete_coloring(const Digraph& d, const Coloring& c) {
    require_covers(d, c);
    const int k = c.color_count();
    std::vector<char> seen = pair_matrix(d, c);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i != j && !seen[static_cast<std::size_t>(i) * k + j]) return false;
        }
    }
    return true;
}

std::vector<std::pair<int, int>> missing_pairs(const Digraph& d, const Coloring& c) {
    require_covers(d, c);
    const int k = c.color_count();
    std::vector<char> seen = pair_matrix(d, c);
    std::vector<std::pair<int, int>> missing;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i != j && !seen[static_cast<std::size_t>(i) * k + j]) {
                missing.emplace_back(i + 1, j + 1);
            }
        }
    }
    return missing;
}

std::string_view to_string(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::dc_upper: return "dc-upper";
        case WitnessKind::dac_lower: return "dac-lower";
        case WitnessKind::psi_lower: return "psi-lower";
        case WitnessKind::none: break;
    }
    return "none";
}

bool ColoringCertificate::verify() const {
    if (coloring.size() != digraph.order()) return false;
    return acyclic == is_acyclic_coloring(digraph, coloring) &&
           complete == is_complete_coloring(digraph, coloring);
}

ColoringCertificate make_certificate(Digraph d, Coloring c, WitnessKind witnesses) {
    require_covers(d, c);
    ColoringCertificate cert{std::move(d), std::move(c), false, false, witnesses};
    cert.acyclic = is_acyclic_coloring(cert.digraph, cert.coloring);
    cert.complete = is_complete_coloring(cert.digraph, cert.coloring);
    return cert;
}

Coloring parse_coloring(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<std::pair<int, int>> entries;
    int max_v = -1;
    while (std::getline(in, line)) {
        ++line_no;
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream fields(line);
        int v, c;
        if (!(fields >> v >> c)) {
            throw ParseError("line " + std::to_string(line_no) + ": expected \"v c\"");
        }
        std::string trailing;
        if (fields >> trailing) {
            throw ParseError("line " + std::to_string(line_no) + ": unexpected trailing token");
        }
        if (v < 0) throw ParseError("line " + std::to_string(line_no) + ": negative vertex");
        entries.emplace_back(v, c);
        max_v = std::max(max_v, v);
    }
    if (entries.empty()) throw ParseError("empty coloring");
    std::vector<int> colors(max_v + 1, 0);
    for (const auto& [v, c] : entries) {
        if (colors[v] != 0) throw ParseError("vertex " + std::to_string(v) + " colored twice");
        colors[v] = c;
    }
    for (int v = 0; v <= max_v; ++v) {
        if (colors[v] == 0) throw ParseError("vertex " + std::to_string(v) + " missing");
    }
    try {
        return Coloring(std::move(colors));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Coloring parse_coloring(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_coloring(in);
}

void write_coloring(std::ostream& out, const Coloring& c) {
    for (int v = 0; v < c.size(); ++v) out << v << ' ' << c.color_of(v) << '\n';
}

std::string to_text(const Coloring& c) {
    std::ostringstream out;
    write_coloring(out, c);
    return out.str();
}

}  // namespace diachrome
