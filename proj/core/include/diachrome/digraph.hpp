#ifndef DIACHROME_DIGRAPH_HPP
#define DIACHROME_DIGRAPH_HPP

#include <utility>
#include <vector>

#include "diachrome/vertex_set.hpp"

namespace diachrome {

using Arc = std::pair<int, int>;

/// Immutable directed graph on vertices 0..n-1. No loops, no parallel arcs.
/// All structural operations return fresh digraphs.
class Digraph {
public:
    Digraph() = default;

    /// Builds a digraph from an arc list; duplicate arcs collapse silently.
    /// Throws std::invalid_argument on a loop or an endpoint outside 0..n-1.
    Digraph(int n, const std::vector<Arc>& arcs);

    static Digraph from_arcs(int n, const std::vector<Arc>& arcs) {
        return Digraph(n, arcs);
    }

    int order() const { return n_; }
    int size() const { return m_; }

    bool has_arc(int u, int v) const {
        return u >= 0 && u < n_ && v >= 0 && v < n_ && out_[u].contains(v);
    }

    const VertexSet& out_neighbors(int u) const { return out_[u]; }
    const VertexSet& in_neighbors(int u) const { return in_[u]; }

    int out_degree(int u) const { return out_[u].size(); }
    int in_degree(int u) const { return in_[u].size(); }

    /// Arcs in lexicographic order.
    std::vector<Arc> arcs() const;

    /// Each arc reversed.
    Digraph converse() const;

    /// Arc present iff absent here (over ordered non-loop pairs).
    Digraph complement() const;

    bool is_acyclic() const;

    /// True iff both (u,v) and (v,u) are arcs, i.e. u and v span a 2-cycle.
    bool adjacent(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }

    /// Exactly one of (u,v),(v,u) present for every vertex pair.
    bool is_tournament() const;

    /// Every arc has its reverse present.
    bool is_symmetric() const;

    /// No arc has its reverse present.
    bool is_asymmetric() const;

    /// Unordered pairs {u,v}, u < v, with at least one arc between them.
    std::vector<Arc> underlying_graph_edges() const;

    /// Subdigraph induced by s, relabeled to 0..|s|-1 in ascending vertex order.
    /// The returned map sends new labels to the original ones.
    std::pair<Digraph, std::vector<int>> induced(const VertexSet& s) const;

    /// Deletes u and relabels the rest as induced() does.
    Digraph remove_vertex(int u) const;

    /// Deletes the arc (u,v); throws if absent.
    Digraph remove_arc(int u, int v) const;

    /// Strongly connected components, listed in a topological order of the
    /// condensation (sources first).
    std::vector<VertexSet> strong_components() const;

    /// Quotient by strong components; vertex i is the i-th component of
    /// strong_components(). Always acyclic.
    Digraph condensation() const;

    bool operator==(const Digraph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;

    void add_arc_unchecked(int u, int v);
};

}  // namespace diachrome

#endif
