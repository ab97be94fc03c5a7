#ifndef DIACHROME_DIHOM_HPP
#define DIACHROME_DIHOM_HPP

#include <vector>

#include "diachrome/digraph.hpp"

namespace diachrome {

/// One identification of two nonadjacent vertices. Labels refer to the
/// digraph the step applies to; `identified` is removed, `survivor` keeps
/// the merged vertex (and shifts down by one when identified < survivor).
struct DihomStep {
    int identified = -1;
    int survivor = -1;
};

/// A chain of identifications from a source digraph down to an image.
/// images[0] is the source; images[i] is the elementary image of
/// images[i-1] under steps[i-1].
struct DihomSequence {
    Digraph source;
    std::vector<DihomStep> steps;
    std::vector<Digraph> images;

    const Digraph& final_image() const { return images.back(); }
};

/// Identifies the nonadjacent vertices u and v; the merged vertex keeps
/// label v and inherits u's arcs. The result lives on n-1 vertices,
/// relabeled by deleting u. Throws when u,v span a 2-cycle or u == v.
Digraph elementary_image(const Digraph& d, int u, int v);

/// Image under the partition: one vertex per class, arcs between classes
/// exactly where the original has arcs in that direction. Every class must
/// induce an acyclic subdigraph. Classes map to vertices in list order.
Digraph image_from_partition(const Digraph& d, const std::vector<VertexSet>& classes);

/// A sequence of identifications from d to the complete symmetric digraph
/// whose order is the diachromatic number: each class of an optimal complete
/// acyclic coloring is merged to a point along its topological order.
DihomSequence interpolation_sequence(const Digraph& d);

/// First image along the interpolation sequence whose dichromatic number is
/// exactly l. Throws unless dc(d) <= l <= dac(d).
Digraph image_with_dichromatic(const Digraph& d, int l);

}  // namespace diachrome

#endif
