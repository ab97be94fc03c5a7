#ifndef DIACHROME_FAMILIES_HPP
#define DIACHROME_FAMILIES_HPP

#include <cstdint>
#include <vector>

#include "diachrome/coloring.hpp"
#include "diachrome/digraph.hpp"

namespace diachrome {

/// Circulant tournament on 2m+1 vertices: arc (i,j) iff (j-i) mod 2m+1 lies
/// in the connection set J. J must pick exactly one of {d, 2m+1-d} for every
/// difference d in 1..m.
struct CirculantSpec {
    int half_order = 0;           // m; order is 2m+1
    std::vector<int> connection;  // J, values in 1..2m

    /// Throws std::invalid_argument when J is malformed.
    void validate() const;
};

Digraph circulant_tournament(const CirculantSpec& spec);

/// Acyclic tournament with arcs i -> j for i < j.
Digraph transitive_tournament(int n);

/// 2m vertices, arcs 2i -> 2i+1.
Digraph oriented_matching(int m);

/// All ordered non-loop pairs present.
Digraph complete_symmetric(int k);

/// Each unordered pair oriented by one fair draw from a seeded mt19937_64.
Digraph random_tournament(int n, std::uint64_t seed);

/// Each ordered non-loop pair present independently with probability p.
Digraph random_digraph(int n, double p, std::uint64_t seed);

/// Complete acyclic coloring of oriented_matching(m) with the most colors its
/// size admits: sources of the l-th arc block get color l, their sinks get
/// the remaining colors bijectively, surplus arcs reuse color 1. m >= 1.
ColoringCertificate matching_coloring(int m);

/// Complete acyclic (m+1)-coloring of the circulant tournament pairing i
/// with 2m+1-i; vertex 0 alone keeps color 1.
ColoringCertificate circulant_coloring(const CirculantSpec& spec);

/// Complete acyclic ceil(n/2)-coloring of the transitive tournament pairing
/// position i with position n+1-i.
ColoringCertificate transitive_coloring(int n);

/// Complete coloring built from two disjoint induced transitive tournaments
/// on r_set and s_set, with at least min(r,s) + floor(|s-r|/2) colors; the
/// rest of the digraph is colored greedily.
ColoringCertificate two_transitive_coloring(const Digraph& d, const VertexSet& r_set,
                                            const VertexSet& s_set);

}  // namespace diachrome

#endif
