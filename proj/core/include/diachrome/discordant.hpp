#ifndef DIACHROME_DISCORDANT_HPP
#define DIACHROME_DISCORDANT_HPP

#include <utility>
#include <vector>

#include "diachrome/coloring.hpp"
#include "diachrome/digraph.hpp"

namespace diachrome {

/// A transitive subtournament such that every outside vertex both sends an
/// arc into it and receives one from it.
struct DiscordantResult {
    VertexSet vertices;
    std::vector<int> acyclic_order;  // induced tournament is transitive in this order
    std::pair<int, int> anchor_arc{-1, -1};
    int directed_triangle_score = 0;    // directed triangles through the anchor
    int transitive_triangle_score = 0;  // transitive triangles with anchor source/sink
    bool fallback_extended = false;     // set when post-verification had to grow the set
};

/// Extracts a small discordant subtournament: scores every arc by the number
/// of directed triangles through it plus the transitive triangles it spans
/// source-to-sink, anchors on a maximizing arc, then peels the common
/// out-neighborhood by maximum in-degree and the dominated part of the common
/// in-neighborhood by maximum out-degree. Ties break toward lower indices.
/// Requires a tournament with order >= 3. The result never exceeds
/// 2*log2((2n+2)/3) vertices.
DiscordantResult discordant_subtournament(const Digraph& t);

/// Exact minimum order of a discordant subtournament, by subset enumeration
/// in increasing size. Meant for order <= ~12.
int xi2_exact(const Digraph& t);

/// Complete acyclic coloring of a tournament built by repeatedly extracting
/// a discordant subtournament of the residual as one chromatic class until
/// at most two vertices remain. Color count is at least
/// n / (2*log2((2n+2)/3)).
ColoringCertificate discordant_partition_coloring(const Digraph& t);

/// 2*log2((2n+2)/3): the guaranteed size ceiling for extraction at order n.
double discordant_size_bound(int n);

}  // namespace diachrome

#endif
