#include "diachrome/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diachrome {

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : n_(n) {
    if (n < 0) throw std::invalid_argument("digraph order must be nonnegative");
    out_.assign(n_, VertexSet(n_));
    in_.assign(n_, VertexSet(n_));
    for (const auto& [u, v] : arcs) {
        if (u == v) {
            throw std::invalid_argument("loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") rejected");
        }
        if (u < 0 || u >= n_ || v < 0 || v >= n_) {
            throw std::invalid_argument("arc endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        }
        add_arc_unchecked(u, v);
    }
}

void Digraph::add_arc_unchecked(int u, int v) {
    if (!out_[u].contains(v)) {
        out_[u].add(v);
        in_[v].add(u);
        ++m_;
    }
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        out_[u].for_each([&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

Digraph Digraph::converse() const {
    Digraph g;
    g.n_ = n_;
    g.m_ = m_;
    g.out_ = in_;
    g.in_ = out_;
    return g;
}

Digraph Digraph::complement() const {
    Digraph g;
    g.n_ = n_;
    g.out_.assign(n_, VertexSet(n_));
    g.in_.assign(n_, VertexSet(n_));
    for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) {
            if (u != v && !out_[u].contains(v)) g.add_arc_unchecked(u, v);
        }
    }
    return g;
}

bool Digraph::is_acyclic() const {
    // Kahn over the whole vertex set.
    std::vector<int> indeg(n_);
    std::vector<int> stack;
    for (int v = 0; v < n_; ++v) {
        indeg[v] = in_[v].size();
        if (indeg[v] == 0) stack.push_back(v);
    }
    int removed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++removed;
        out_[v].for_each([&](int w) {
            if (--indeg[w] == 0) stack.push_back(w);
        });
    }
    return removed == n_;
}

bool Digraph::is_tournament() const {
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (out_[u].contains(v) == out_[v].contains(u)) return false;
        }
    }
    return true;
}

bool Digraph::is_symmetric() const {
    for (int u = 0; u < n_; ++u) {
        if (!(out_[u] == in_[u])) return false;
    }
    return true;
}

bool Digraph::is_asymmetric() const {
    for (int u = 0; u < n_; ++u) {
        if (out_[u].intersects(in_[u])) return false;
    }
    return true;
}

std::vector<Arc> Digraph::underlying_graph_edges() const {
    std::vector<Arc> edges;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (out_[u].contains(v) || out_[v].contains(u)) edges.emplace_back(u, v);
        }
    }
    return edges;
}

std::pair<Digraph, std::vector<int>> Digraph::induced(const VertexSet& s) const {
    if (s.capacity() != n_) throw std::invalid_argument("vertex set capacity mismatch");
    std::vector<int> old_of_new = s.to_vector();
    std::vector<int> new_of_old(n_, -1);
    for (std::size_t i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = static_cast<int>(i);

    Digraph g;
    g.n_ = static_cast<int>(old_of_new.size());
    g.out_.assign(g.n_, VertexSet(g.n_));
    g.in_.assign(g.n_, VertexSet(g.n_));
    for (int nu = 0; nu < g.n_; ++nu) {
        VertexSet targets = out_[old_of_new[nu]] & s;
        targets.for_each([&](int old_v) { g.add_arc_unchecked(nu, new_of_old[old_v]); });
    }
    return {std::move(g), std::move(old_of_new)};
}

Digraph Digraph::remove_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::invalid_argument("vertex out of range");
    VertexSet keep = VertexSet::full(n_);
    keep.remove(u);
    return induced(keep).first;
}

Digraph Digraph::remove_arc(int u, int v) const {
    if (!has_arc(u, v)) throw std::invalid_argument("arc not present");
    Digraph g = *this;
    g.out_[u].remove(v);
    g.in_[v].remove(u);
    --g.m_;
    return g;
}

std::vector<VertexSet> Digraph::strong_components() const {
    // Iterative Tarjan; components complete in reverse topological order.
    std::vector<int> index(n_, -1), lowlink(n_, 0);
    std::vector<char> on_stack(n_, 0);
    std::vector<int> stack;
    std::vector<VertexSet> components;
    int next_index = 0;

    struct Frame {
        int v;
        std::vector<int> succ;
        std::size_t next = 0;
    };
    std::vector<Frame> call_stack;

    for (int root = 0; root < n_; ++root) {
        if (index[root] != -1) continue;
        call_stack.push_back({root, out_[root].to_vector()});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;

        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            if (frame.next < frame.succ.size()) {
                int w = frame.succ[frame.next++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call_stack.push_back({w, out_[w].to_vector()});
                } else if (on_stack[w]) {
                    lowlink[frame.v] = std::min(lowlink[frame.v], index[w]);
                }
            } else {
                int v = frame.v;
                call_stack.pop_back();
                if (!call_stack.empty()) {
                    int parent = call_stack.back().v;
                    lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
                }
                if (lowlink[v] == index[v]) {
                    VertexSet comp(n_);
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.add(w);
                    } while (w != v);
                    components.push_back(std::move(comp));
                }
            }
        }
    }
    std::reverse(components.begin(), components.end());
    return components;
}

Digraph Digraph::condensation() const {
    std::vector<VertexSet> comps = strong_components();
    const int k = static_cast<int>(comps.size());
    std::vector<int> comp_of(n_, -1);
    for (int i = 0; i < k; ++i) {
        comps[i].for_each([&](int v) { comp_of[v] = i; });
    }
    Digraph g;
    g.n_ = k;
    g.out_.assign(k, VertexSet(k));
    g.in_.assign(k, VertexSet(k));
    for (int u = 0; u < n_; ++u) {
        out_[u].for_each([&](int v) {
            if (comp_of[u] != comp_of[v]) g.add_arc_unchecked(comp_of[u], comp_of[v]);
        });
    }
    return g;
}

}  // namespace diachrome
