#include <doctest.h>

#include <stdexcept>

#include "diachrome/dihom.hpp"
#include "diachrome/families.hpp"
#include "diachrome/laws.hpp"
#include "diachrome/solver.hpp"
#include "oracle.hpp"

using namespace diachrome;

namespace {

Digraph cycle3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

// Every surjective coloring with exactly dc colors, tested for one that
// assigns u and v the same color.
bool optimal_coloring_merges(const Digraph& d, int u, int v) {
    const int n = d.order();
    const int dc = dichromatic_number(d).value;
    std::vector<int> assign(n, 0);
    bool found = false;
    auto enumerate = [&](auto&& self, int vertex, int used) -> void {
        if (found) return;
        if (vertex == n) {
            if (used == dc && assign[u] == assign[v] &&
                oracle::all_classes_acyclic(d, assign, used)) {
                found = true;
            }
            return;
        }
        for (int c = 1; c <= std::min(used + 1, dc); ++c) {
            assign[vertex] = c;
            self(self, vertex + 1, std::max(used, c));
        }
        assign[vertex] = 0;
    };
    enumerate(enumerate, 0, 0);
    return found;
}

}  // namespace

TEST_CASE("elementary image follows the three-clause arc set") {
    Digraph path(3, {{0, 1}, {1, 2}});
    CHECK(elementary_image(path, 0, 2) == Digraph(2, {{0, 1}, {1, 0}}));

    CHECK(elementary_image(Digraph(2, {}), 0, 1) == Digraph(1, {}));

    CHECK_THROWS_AS(elementary_image(Digraph(2, {{0, 1}, {1, 0}}), 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(elementary_image(path, 1, 1), std::invalid_argument);

    // the lone arc between the identified pair dies with the merge
    CHECK(elementary_image(Digraph(2, {{0, 1}}), 0, 1) == Digraph(1, {}));
}

TEST_CASE("image order and arcs under identification") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Digraph d = random_digraph(6, 0.35, seed);
        for (int u = 0; u < 6; ++u) {
            for (int v = 0; v < 6; ++v) {
                if (u == v || d.adjacent(u, v)) continue;
                Digraph image = elementary_image(d, u, v);
                CHECK(image.order() == 5);
                // no loops and at most the original arc count
                CHECK(image.size() <= d.size());
            }
        }
    }
}

TEST_CASE("image from partition") {
    Digraph c3 = cycle3();
    VertexSet a(3), b(3);
    a.add(0);
    a.add(1);
    b.add(2);
    CHECK(image_from_partition(c3, {a, b}) == complete_symmetric(2));

    std::vector<VertexSet> singletons;
    for (int v = 0; v < 3; ++v) {
        VertexSet s(3);
        s.add(v);
        singletons.push_back(s);
    }
    CHECK(image_from_partition(c3, singletons) == c3);

    Digraph tt3 = transitive_tournament(3);
    CHECK(image_from_partition(tt3, {VertexSet::full(3)}) == Digraph(1, {}));

    // one-directional cross arcs stay one-directional
    Digraph path(3, {{0, 1}, {1, 2}});
    VertexSet left(3), right(3);
    left.add(0);
    right.add(1);
    right.add(2);
    CHECK(image_from_partition(path, {left, right}) == Digraph(2, {{0, 1}}));

    CHECK_THROWS_AS(image_from_partition(c3, {VertexSet::full(3), b}),
                    std::invalid_argument);
    CHECK_THROWS_AS(image_from_partition(c3, {a}), std::invalid_argument);
    CHECK_THROWS_AS(image_from_partition(c3, {VertexSet::full(3)}), std::invalid_argument);
}

TEST_CASE("interpolation sequence reaches the complete symmetric digraph") {
    DihomSequence tt5 = interpolation_sequence(transitive_tournament(5));
    CHECK(tt5.steps.size() == 2);
    CHECK(tt5.final_image() == complete_symmetric(3));

    DihomSequence k3 = interpolation_sequence(complete_symmetric(3));
    CHECK(k3.steps.empty());
    CHECK(k3.final_image() == complete_symmetric(3));

    DihomSequence c3 = interpolation_sequence(cycle3());
    CHECK(c3.steps.size() == 1);
    CHECK(c3.final_image() == complete_symmetric(2));

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Digraph d = random_digraph(6, 0.4, seed);
        const int dac = diachromatic_number(d).value;
        DihomSequence seq = interpolation_sequence(d);
        CHECK(seq.images.size() == seq.steps.size() + 1);
        CHECK(seq.steps.size() == static_cast<std::size_t>(6 - dac));
        CHECK(seq.final_image() == complete_symmetric(dac));
        // each image one vertex smaller than its predecessor
        for (std::size_t i = 1; i < seq.images.size(); ++i) {
            CHECK(seq.images[i].order() == seq.images[i - 1].order() - 1);
        }
        // dichromatic number never drops along the sequence
        int last = dichromatic_number(seq.images.front()).value;
        for (const Digraph& image : seq.images) {
            const int dc = dichromatic_number(image).value;
            CHECK(dc >= last);
            CHECK(dc <= last + 1);
            last = dc;
        }
    }
}

TEST_CASE("images with a prescribed dichromatic number") {
    Digraph tt5 = transitive_tournament(5);
    CHECK(image_with_dichromatic(tt5, 3) == complete_symmetric(3));
    CHECK(image_with_dichromatic(tt5, 1) == tt5);
    Digraph mid = image_with_dichromatic(tt5, 2);
    CHECK(dichromatic_number(mid).value == 2);

    CHECK_THROWS_AS(image_with_dichromatic(tt5, 4), std::invalid_argument);
    CHECK_THROWS_AS(image_with_dichromatic(cycle3(), 3), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Digraph d = random_digraph(6, 0.45, seed);
        const int dc = dichromatic_number(d).value;
        const int dac = diachromatic_number(d).value;
        for (int l = dc; l <= dac; ++l) {
            CHECK(dichromatic_number(image_with_dichromatic(d, l)).value == l);
        }
    }
}

TEST_CASE("identification step bounds, exhaustively at order 3") {
    for (const Digraph& d : exhaustive_digraphs(3)) {
        const int dc = dichromatic_number(d).value;
        const int dac = diachromatic_number(d).value;
        const int dc_c = dichromatic_number(d.complement()).value;
        for (int u = 0; u < 3; ++u) {
            for (int v = u + 1; v < 3; ++v) {
                if (d.adjacent(u, v)) continue;
                Digraph image = elementary_image(d, u, v);
                const int dc_e = dichromatic_number(image).value;
                CHECK(dc <= dc_e);
                CHECK(dc_e <= dc + 1);
                const int dac_e = diachromatic_number(image).value;
                CHECK(dac - 2 <= dac_e);
                CHECK(dac_e <= dac);
                const int dcc_e = dichromatic_number(image.complement()).value;
                CHECK(dc_c - 1 <= dcc_e);
                CHECK(dcc_e <= dc_c + 1);
                // preserved dichromatic number forces a color-sharing
                // optimal coloring (the converse is false, see below)
                if (dc_e == dc) CHECK(optimal_coloring_merges(d, u, v));
            }
        }
    }
}

TEST_CASE("identification equality needs a sharing optimal coloring") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Digraph d = random_digraph(4, 0.45, seed);
        const int dc = dichromatic_number(d).value;
        for (int u = 0; u < 4; ++u) {
            for (int v = u + 1; v < 4; ++v) {
                if (d.adjacent(u, v)) continue;
                const int dc_e = dichromatic_number(elementary_image(d, u, v)).value;
                if (dc_e == dc) CHECK(optimal_coloring_merges(d, u, v));
            }
        }
    }
}

TEST_CASE("a sharing optimal coloring does not force equality") {
    // Identifying the endpoints of the path 0->2->1 welds its two arcs into
    // a 2-cycle: the merged class of the shared 1-coloring turns cyclic, so
    // the dichromatic number climbs even though an optimal coloring merged
    // the pair.
    Digraph path(3, {{0, 2}, {2, 1}});
    CHECK(dichromatic_number(path).value == 1);
    CHECK(optimal_coloring_merges(path, 0, 1));
    CHECK(dichromatic_number(elementary_image(path, 0, 1)).value == 2);
}

TEST_CASE("some identification preserves the diachromatic number") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Digraph d = random_digraph(5, 0.4, seed);
        bool any_pair = false;
        bool preserved = false;
        const int dac = diachromatic_number(d).value;
        for (int u = 0; u < 5; ++u) {
            for (int v = u + 1; v < 5; ++v) {
                if (d.adjacent(u, v)) continue;
                any_pair = true;
                if (diachromatic_number(elementary_image(d, u, v)).value == dac) {
                    preserved = true;
                }
            }
        }
        if (any_pair) CHECK(preserved);
    }
}
