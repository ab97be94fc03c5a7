#include "diachrome/discordant.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace diachrome {

namespace {

void require_tournament(const Digraph& t, int min_order) {
    if (!t.is_tournament()) throw std::invalid_argument("digraph is not a tournament");
    if (t.order() < min_order) {
        throw std::invalid_argument("tournament must have order >= " + std::to_string(min_order));
    }
}

// Peels `pool` by repeatedly taking the vertex of maximum degree toward
// `inward` (in-degree when true, out-degree otherwise) within the residual
// pool and removing its closed neighborhood on that side. The picks arrive
// in peel order.
std::vector<int> peel(const Digraph& t, VertexSet pool, bool inward) {
    std::vector<int> picks;
    while (!pool.empty()) {
        int best = -1, best_deg = -1;
        pool.for_each([&](int v) {
            const VertexSet& nbrs = inward ? t.in_neighbors(v) : t.out_neighbors(v);
            const int deg = nbrs.intersection_size(pool);
            if (deg > best_deg) {
                best_deg = deg;
                best = v;
            }
        });
        picks.push_back(best);
        pool -= inward ? t.in_neighbors(best) : t.out_neighbors(best);
        pool.remove(best);
    }
    return picks;
}

bool covers(const Digraph& t, const VertexSet& chosen, int x) {
    return t.out_neighbors(x).intersects(chosen) && t.in_neighbors(x).intersects(chosen);
}

}  // namespace

double discordant_size_bound(int n) {
    return 2.0 * std::log2((2.0 * n + 2.0) / 3.0);
}

DiscordantResult discordant_subtournament(const Digraph& t) {
    require_tournament(t, 3);
    const int n = t.order();

    // anchor: arc maximizing directed triangles through it plus transitive
    // triangles it spans source to sink; ties to the lexicographically
    // least arc
    DiscordantResult result;
    int best_score = -1;
    for (const auto& [x, y] : t.arcs()) {
        const int directed = t.out_neighbors(y).intersection_size(t.in_neighbors(x));
        const int transitive = t.out_neighbors(x).intersection_size(t.in_neighbors(y));
        if (directed + transitive > best_score) {
            best_score = directed + transitive;
            result.anchor_arc = {x, y};
            result.directed_triangle_score = directed;
            result.transitive_triangle_score = transitive;
        }
    }
    const auto [x0, y0] = result.anchor_arc;

    // common out-neighborhood, peeled by maximum in-degree
    VertexSet b_plus = t.out_neighbors(x0) & t.out_neighbors(y0);
    std::vector<int> zs = peel(t, b_plus, /*inward=*/true);

    // the part of the common in-neighborhood dominating every pick so far,
    // peeled by maximum out-degree
    VertexSet chosen_core(n);
    chosen_core.add(x0);
    chosen_core.add(y0);
    for (int z : zs) chosen_core.add(z);
    VertexSet b_star(n);
    VertexSet b_minus = t.in_neighbors(x0) & t.in_neighbors(y0);
    b_minus.for_each([&](int w) {
        if (chosen_core.is_subset_of(t.out_neighbors(w))) b_star.add(w);
    });
    std::vector<int> ws = peel(t, b_star, /*inward=*/false);

    // acyclic order: ws reversed, anchor, zs in peel order
    result.acyclic_order.assign(ws.rbegin(), ws.rend());
    result.acyclic_order.push_back(x0);
    result.acyclic_order.push_back(y0);
    result.acyclic_order.insert(result.acyclic_order.end(), zs.begin(), zs.end());
    result.vertices = VertexSet(n);
    for (int v : result.acyclic_order) result.vertices.add(v);

    // The construction covers every outside vertex; verify anyway, and grow
    // the set with the least uncovered vertex if it ever does not. An
    // uncovered vertex either beats or loses to the whole set, so it can be
    // prepended or appended without breaking transitivity.
    for (;;) {
        int uncovered = -1;
        for (int x = 0; x < n && uncovered == -1; ++x) {
            if (!result.vertices.contains(x) && !covers(t, result.vertices, x)) uncovered = x;
        }
        if (uncovered == -1) break;
        result.fallback_extended = true;
        if (t.out_neighbors(uncovered).intersects(result.vertices)) {
            result.acyclic_order.insert(result.acyclic_order.begin(), uncovered);
        } else {
            result.acyclic_order.push_back(uncovered);
        }
        result.vertices.add(uncovered);
    }
    return result;
}

int xi2_exact(const Digraph& t) {
    require_tournament(t, 3);
    const int n = t.order();

    std::vector<int> members;
    VertexSet candidate(n);
    // subsets in increasing size, lexicographic within a size
    auto search = [&](auto&& self, int next, int remaining) -> bool {
        if (remaining == 0) {
            if (!t.induced(candidate).first.is_acyclic()) return false;
            for (int x = 0; x < n; ++x) {
                if (!candidate.contains(x) && !covers(t, candidate, x)) return false;
            }
            return true;
        }
        for (int v = next; v + remaining <= n; ++v) {
            candidate.add(v);
            if (self(self, v + 1, remaining - 1)) return true;
            candidate.remove(v);
        }
        return false;
    };
    for (int size = 1; size <= n; ++size) {
        if (search(search, 0, size)) return size;
    }
    return n;  // unreachable: the whole vertex set of a transitive tournament qualifies
}

ColoringCertificate discordant_partition_coloring(const Digraph& t) {
    require_tournament(t, 3);
    const int n = t.order();
    std::vector<int> colors(n, 0);
    VertexSet residual = VertexSet::full(n);
    int next_color = 0;
    while (residual.size() >= 3) {
        auto [sub, old_of_new] = t.induced(residual);
        DiscordantResult part = discordant_subtournament(sub);
        ++next_color;
        part.vertices.for_each([&](int v) {
            colors[old_of_new[v]] = next_color;
            residual.remove(old_of_new[v]);
        });
    }
    if (!residual.empty()) {
        ++next_color;
        residual.for_each([&](int v) { colors[v] = next_color; });
    }

    // Every class is discordant in its residual, so all ordered pairs are
    // served; if a pair involving the leftover class were ever missing,
    // merge that class downward until the coloring is complete again.
    Coloring coloring{std::move(colors)};
    for (;;) {
        auto missing = missing_pairs(t, coloring);
        if (missing.empty()) break;
        const int k = coloring.color_count();
        bool only_last = k >= 2;
        for (const auto& [i, j] : missing) {
            if (i != k && j != k) {
                only_last = false;
                break;
            }
        }
        if (!only_last) break;
        std::vector<int> merged = coloring.colors();
        for (int& c : merged) {
            if (c == k) c = k - 1;
        }
        coloring = Coloring(std::move(merged));
    }
    return make_certificate(t, std::move(coloring), WitnessKind::dac_lower);
}

}  // namespace diachrome
