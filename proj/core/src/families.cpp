#include "diachrome/families.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "diachrome/solver.hpp"

namespace diachrome {

void CirculantSpec::validate() const {
    if (half_order < 1) throw std::invalid_argument("circulant half-order must be >= 1");
    const int n = 2 * half_order + 1;
    if (connection.empty()) throw std::invalid_argument("connection set must be nonempty");
    std::vector<char> present(n, 0);
    for (int j : connection) {
        if (j <= 0 || j >= n) {
            throw std::invalid_argument("connection element " + std::to_string(j) +
                                        " outside 1.." + std::to_string(n - 1));
        }
        if (present[j]) throw std::invalid_argument("duplicate connection element");
        present[j] = 1;
    }
    for (int d = 1; d <= half_order; ++d) {
        const int count = present[d] + present[n - d];
        if (count == 2) {
            throw std::invalid_argument("connection set holds both " + std::to_string(d) +
                                        " and its negative");
        }
        if (count == 0) {
            throw std::invalid_argument("connection set misses difference " + std::to_string(d));
        }
    }
}

Digraph circulant_tournament(const CirculantSpec& spec) {
    spec.validate();
    const int n = 2 * spec.half_order + 1;
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * spec.connection.size());
    for (int i = 0; i < n; ++i) {
        for (int j : spec.connection) arcs.emplace_back(i, (i + j) % n);
    }
    return Digraph(n, arcs);
}

Digraph transitive_tournament(int n) {
    if (n < 0) throw std::invalid_argument("order must be nonnegative");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
    }
    return Digraph(n, arcs);
}

Digraph oriented_matching(int m) {
    if (m < 0) throw std::invalid_argument("size must be nonnegative");
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (int i = 0; i < m; ++i) arcs.emplace_back(2 * i, 2 * i + 1);
    return Digraph(2 * m, arcs);
}

Digraph complete_symmetric(int k) {
    if (k < 0) throw std::invalid_argument("order must be nonnegative");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(k) * (k - 1));
    for (int u = 0; u < k; ++u) {
        for (int v = 0; v < k; ++v) {
            if (u != v) arcs.emplace_back(u, v);
        }
    }
    return Digraph(k, arcs);
}

Digraph random_tournament(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("order must be nonnegative");
    std::mt19937_64 gen(seed);
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (gen() & 1u) {
                arcs.emplace_back(u, v);
            } else {
                arcs.emplace_back(v, u);
            }
        }
    }
    return Digraph(n, arcs);
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("order must be nonnegative");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability must lie in [0,1]");
    std::mt19937_64 gen(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            // top 53 bits as a uniform double in [0,1)
            const double draw = static_cast<double>(gen() >> 11) * 0x1.0p-53;
            if (draw < p) arcs.emplace_back(u, v);
        }
    }
    return Digraph(n, arcs);
}

ColoringCertificate matching_coloring(int m) {
    if (m < 1) throw std::invalid_argument("matching must have at least one arc");
    const int k = psi_size_bound(m);
    std::vector<int> colors(2 * m, 1);
    if (k >= 2) {
        const int block_arcs = k * (k - 1);
        for (int i = 1; i <= std::min(m, block_arcs); ++i) {
            const int l = (i - 1) / (k - 1) + 1;  // source block
            const int t = i - (l - 1) * (k - 1);  // position inside the block
            colors[2 * (i - 1)] = l;
            colors[2 * i - 1] = t < l ? t : t + 1;
        }
    }
    return make_certificate(oriented_matching(m), Coloring(std::move(colors)),
                            WitnessKind::dac_lower);
}

ColoringCertificate circulant_coloring(const CirculantSpec& spec) {
    Digraph t = circulant_tournament(spec);
    const int n = t.order();
    std::vector<int> colors(n);
    colors[0] = 1;
    for (int i = 1; i <= spec.half_order; ++i) {
        colors[i] = i + 1;
        colors[n - i] = i + 1;
    }
    return make_certificate(std::move(t), Coloring(std::move(colors)), WitnessKind::dac_lower);
}

ColoringCertificate transitive_coloring(int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<int> colors(n);
    for (int i = 1; i <= n; ++i) colors[i - 1] = std::min(i, n + 1 - i);
    return make_certificate(transitive_tournament(n), Coloring(std::move(colors)),
                            WitnessKind::dac_lower);
}

namespace {

// Members of `s` listed in the unique acyclic order of the transitive
// tournament they induce. Throws when the induced subdigraph is not one.
std::vector<int> transitive_order(const Digraph& d, const VertexSet& s) {
    auto [sub, old_of_new] = d.induced(s);
    if (!sub.is_tournament() || !sub.is_acyclic()) {
        throw std::invalid_argument("set does not induce a transitive tournament");
    }
    std::vector<int> order(sub.order());
    for (int v = 0; v < sub.order(); ++v) order[sub.in_degree(v)] = old_of_new[v];
    return order;
}

}  // namespace

ColoringCertificate two_transitive_coloring(const Digraph& d, const VertexSet& r_set,
                                            const VertexSet& s_set) {
    if (r_set.intersects(s_set)) throw std::invalid_argument("tournament sets must be disjoint");
    if (r_set.empty() || s_set.empty()) throw std::invalid_argument("tournament sets must be nonempty");
    std::vector<int> xs = transitive_order(d, r_set);
    std::vector<int> ys = transitive_order(d, s_set);
    if (xs.size() > ys.size()) std::swap(xs, ys);
    const int r = static_cast<int>(xs.size());
    const int s = static_cast<int>(ys.size());
    const int extra = (s - r) / 2;

    std::vector<int> colors(d.order(), 0);
    for (int i = 1; i <= r; ++i) {
        colors[xs[i - 1]] = i;
        colors[ys[extra + r + 1 - i - 1]] = i;
    }
    for (int i = r + 1; i <= r + extra; ++i) {
        colors[ys[extra + i - 1]] = i;
        colors[ys[extra + r + 1 - i - 1]] = i;
    }
    greedy_extend(d, colors);

    ColoringCertificate cert =
        make_certificate(d, Coloring(std::move(colors)), WitnessKind::dac_lower);
    if (!cert.acyclic) cert.witnesses = cert.complete ? WitnessKind::psi_lower : WitnessKind::none;
    return cert;
}

}  // namespace diachrome
