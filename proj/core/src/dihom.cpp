#include "diachrome/dihom.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "diachrome/solver.hpp"

namespace diachrome {

Digraph elementary_image(const Digraph& d, int u, int v) {
    const int n = d.order();
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("cannot identify a vertex with itself");
    if (d.adjacent(u, v)) {
        throw std::invalid_argument("cannot identify adjacent vertices (2-cycle)");
    }

    auto relabel = [&](int x) { return x > u ? x - 1 : x; };
    const int nv = relabel(v);
    std::vector<Arc> arcs;
    arcs.reserve(d.size());
    for (const auto& [x, y] : d.arcs()) {
        if (x != u && y != u) {
            arcs.emplace_back(relabel(x), relabel(y));
        } else if (x == u && y != v) {
            arcs.emplace_back(nv, relabel(y));
        } else if (y == u && x != v) {
            arcs.emplace_back(relabel(x), nv);
        }
        // the lone arc between u and v, if any, dies with the merge
    }
    return Digraph(n - 1, arcs);
}

Digraph image_from_partition(const Digraph& d, const std::vector<VertexSet>& classes) {
    const int n = d.order();
    const int k = static_cast<int>(classes.size());
    std::vector<int> class_of(n, -1);
    for (int i = 0; i < k; ++i) {
        if (classes[i].capacity() != n) throw std::invalid_argument("class capacity mismatch");
        if (classes[i].empty()) throw std::invalid_argument("empty class");
        classes[i].for_each([&](int v) {
            if (class_of[v] != -1) throw std::invalid_argument("classes overlap");
            class_of[v] = i;
        });
        if (!d.induced(classes[i]).first.is_acyclic()) {
            throw std::invalid_argument("class " + std::to_string(i + 1) + " induces a cycle");
        }
    }
    for (int v = 0; v < n; ++v) {
        if (class_of[v] == -1) throw std::invalid_argument("classes do not cover every vertex");
    }

    std::vector<Arc> arcs;
    for (const auto& [x, y] : d.arcs()) {
        if (class_of[x] != class_of[y]) arcs.emplace_back(class_of[x], class_of[y]);
    }
    return Digraph(k, arcs);
}

namespace {

// Topological order of one chromatic class, ties to the lower index.
std::vector<int> class_topo_order(const Digraph& d, const VertexSet& cls) {
    std::vector<int> order;
    VertexSet left = cls;
    while (!left.empty()) {
        int source = -1;
        left.for_each([&](int v) {
            if (source == -1 && !d.in_neighbors(v).intersects(left)) source = v;
        });
        assert(source != -1);  // classes of a certificate are acyclic
        order.push_back(source);
        left.remove(source);
    }
    return order;
}

}  // namespace

DihomSequence interpolation_sequence(const Digraph& d) {
    DihomSequence seq;
    seq.source = d;
    seq.images.push_back(d);
    if (d.order() < 1) return seq;

    SolveResult dac = diachromatic_number(d);
    std::vector<VertexSet> classes = dac.certificate.coloring.chromatic_classes();

    // current label of each original vertex as merges shrink the digraph
    std::vector<int> label(d.order());
    for (int v = 0; v < d.order(); ++v) label[v] = v;

    for (const VertexSet& cls : classes) {
        // Merging along the topological order keeps the accumulated part of
        // the class nonadjacent to the next member: all original arcs
        // between them point forward, and no earlier merge can add a
        // backward one.
        std::vector<int> order = class_topo_order(d, cls);
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            const int u = label[order[i]];
            const int v = label[order[i + 1]];
            seq.steps.push_back({u, v});
            seq.images.push_back(elementary_image(seq.images.back(), u, v));
            for (int& lab : label) {
                if (lab == u) lab = v;
            }
            for (int& lab : label) {
                if (lab > u) --lab;
            }
        }
    }
    assert(seq.final_image().order() == dac.value);
    assert(seq.final_image().size() == dac.value * (dac.value - 1));
    return seq;
}

Digraph image_with_dichromatic(const Digraph& d, int l) {
    const int dc = dichromatic_number(d).value;
    if (l == dc) return d;
    DihomSequence seq = interpolation_sequence(d);
    const int dac = static_cast<int>(seq.final_image().order());
    if (l < dc || l > dac) {
        throw std::invalid_argument("level " + std::to_string(l) + " outside [" +
                                    std::to_string(dc) + "," + std::to_string(dac) + "]");
    }
    // last image with dichromatic number below l; its successor lands on l
    std::size_t j = 0;
    for (std::size_t i = 0; i < seq.images.size(); ++i) {
        if (dichromatic_number(seq.images[i]).value < l) j = i;
    }
    Digraph image = seq.images[j + 1];
    assert(dichromatic_number(image).value == l);
    return image;
}

}  // namespace diachrome
