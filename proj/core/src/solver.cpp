#include "diachrome/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>
#include <thread>
#include <vector>

namespace diachrome {

namespace {

// Backtracking search for a coloring with exactly `k` classes. Vertices are
// assigned in index order; a vertex may open class j only when classes
// 0..j-1 are nonempty, which rules out color-permuted duplicates. Acyclicity
// is maintained per class incrementally; completeness is pruned through the
// count of ordered class pairs still reachable by unassigned arcs.
class ColoringSearch {
public:
    ColoringSearch(const Digraph& d, int k, bool need_acyclic, bool need_complete)
        : d_(d),
          n_(d.order()),
          k_(k),
          need_acyclic_(need_acyclic),
          need_complete_(need_complete),
          assign_(n_, -1),
          members_(k, VertexSet(n_)),
          assigned_(n_),
          pair_seen_(static_cast<std::size_t>(k) * k, 0),
          open_arcs_(d.size()) {}

    std::optional<Coloring> run() {
        if (k_ < 1 || k_ > n_) return std::nullopt;
        if (extend(0)) {
            std::vector<int> colors(n_);
            for (int v = 0; v < n_; ++v) colors[v] = assign_[v] + 1;
            return Coloring(std::move(colors));
        }
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    const Digraph& d_;
    int n_;
    int k_;
    bool need_acyclic_;
    bool need_complete_;
    std::vector<int> assign_;
    std::vector<VertexSet> members_;
    VertexSet assigned_;
    std::vector<char> pair_seen_;
    int pairs_satisfied_ = 0;
    int open_arcs_;
    int classes_used_ = 0;
    std::uint64_t nodes_ = 0;

    bool class_stays_acyclic(int cls, int v) const {
        VertexSet scope = members_[cls];
        scope.add(v);
        std::vector<int> indeg(n_, 0);
        std::vector<int> stack;
        int total = 0;
        scope.for_each([&](int w) {
            indeg[w] = d_.in_neighbors(w).intersection_size(scope);
            ++total;
            if (indeg[w] == 0) stack.push_back(w);
        });
        int removed = 0;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            ++removed;
            VertexSet succ = d_.out_neighbors(w) & scope;
            succ.for_each([&](int x) {
                if (--indeg[x] == 0) stack.push_back(x);
            });
        }
        return removed == total;
    }

    bool extend(int v) {
        if (v == n_) {
            return classes_used_ == k_ &&
                   (!need_complete_ || pairs_satisfied_ == k_ * (k_ - 1));
        }
        const int limit = std::min(classes_used_, k_ - 1);
        for (int cls = 0; cls <= limit; ++cls) {
            ++nodes_;
            if (need_acyclic_ && cls < classes_used_ && !class_stays_acyclic(cls, v)) {
                continue;
            }

            // apply
            const bool opened = (cls == classes_used_);
            if (opened) ++classes_used_;
            assign_[v] = cls;
            members_[cls].add(v);
            int closed = 0;
            std::vector<int> marked;
            auto note_pair = [&](int a, int b) {
                char& seen = pair_seen_[static_cast<std::size_t>(a) * k_ + b];
                if (!seen) {
                    seen = 1;
                    ++pairs_satisfied_;
                    marked.push_back(a * k_ + b);
                }
            };
            VertexSet out_done = d_.out_neighbors(v) & assigned_;
            out_done.for_each([&](int u) {
                ++closed;
                if (assign_[u] != cls) note_pair(cls, assign_[u]);
            });
            VertexSet in_done = d_.in_neighbors(v) & assigned_;
            in_done.for_each([&](int u) {
                ++closed;
                if (assign_[u] != cls) note_pair(assign_[u], cls);
            });
            assigned_.add(v);
            open_arcs_ -= closed;

            // prune, then recurse
            bool viable = classes_used_ + (n_ - v - 1) >= k_;
            if (viable && need_complete_ &&
                pairs_satisfied_ + open_arcs_ < k_ * (k_ - 1)) {
                viable = false;
            }
            if (viable && extend(v + 1)) return true;

            // undo
            open_arcs_ += closed;
            assigned_.remove(v);
            for (int idx : marked) {
                pair_seen_[idx] = 0;
                --pairs_satisfied_;
            }
            members_[cls].remove(v);
            assign_[v] = -1;
            if (opened) --classes_used_;
        }
        return false;
    }
};

struct Feasibility {
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

Feasibility try_exactly(const Digraph& d, int k, bool need_acyclic, bool need_complete) {
    ColoringSearch search(d, k, need_acyclic, need_complete);
    Feasibility f;
    f.coloring = search.run();
    f.nodes = search.nodes();
    return f;
}

// Runs the feasibility test for every candidate k on a small worker pool.
// Each test is deterministic on its own, so the combined outcome does not
// depend on the thread count.
std::vector<Feasibility> run_candidates(const Digraph& d, const std::vector<int>& ks,
                                        bool need_acyclic, bool need_complete,
                                        int threads) {
    std::vector<Feasibility> results(ks.size());
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(ks.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < ks.size(); ++i) {
            results[i] = try_exactly(d, ks[i], need_acyclic, need_complete);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < ks.size(); i = next.fetch_add(1)) {
                results[i] = try_exactly(d, ks[i], need_acyclic, need_complete);
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

void require_nontrivial_order(const Digraph& d) {
    if (d.order() < 1) throw std::invalid_argument("digraph must have at least one vertex");
}

}  // namespace

int psi_size_bound(int m) {
    int k = 1;
    while (static_cast<long long>(k + 1) * k <= m) ++k;
    return k;
}

int dac_upper_bound(const Digraph& d, int dc_value) {
    const int n = d.order();
    int ub = std::min(n, psi_size_bound(d.size()));
    if (d.is_asymmetric()) ub = std::min(ub, (n + 1) / 2);
    ub = std::min(ub, (dc_value + n) / 2);
    return std::max(ub, 1);
}

SolveResult dichromatic_number(const Digraph& d, const SolveOptions& opts) {
    require_nontrivial_order(d);
    const int n = d.order();
    std::uint64_t nodes = 0;
    if (opts.threads > 1) {
        std::vector<int> ks(n);
        for (int k = 1; k <= n; ++k) ks[k - 1] = k;
        auto found = run_candidates(d, ks, true, false, opts.threads);
        for (int k = 1; k <= n; ++k) {
            nodes += found[k - 1].nodes;
            if (found[k - 1].coloring) {
                return {k,
                        make_certificate(d, std::move(*found[k - 1].coloring),
                                         WitnessKind::dc_upper),
                        nodes};
            }
        }
    } else {
        for (int k = 1; k <= n; ++k) {
            Feasibility f = try_exactly(d, k, true, false);
            nodes += f.nodes;
            if (f.coloring) {
                return {k, make_certificate(d, std::move(*f.coloring), WitnessKind::dc_upper),
                        nodes};
            }
        }
    }
    throw std::logic_error("no acyclic coloring found");  // unreachable: singletons always work
}

namespace {

SolveResult descend_from(const Digraph& d, int ub, bool need_acyclic, WitnessKind kind,
                         const SolveOptions& opts) {
    std::uint64_t nodes = 0;
    if (opts.threads > 1) {
        std::vector<int> ks(ub);
        for (int k = 0; k < ub; ++k) ks[k] = ub - k;
        auto found = run_candidates(d, ks, need_acyclic, true, opts.threads);
        std::size_t winner = ks.size();
        for (std::size_t i = 0; i < ks.size(); ++i) {
            nodes += found[i].nodes;
            if (found[i].coloring && winner == ks.size()) winner = i;
        }
        if (winner != ks.size()) {
            return {ks[winner],
                    make_certificate(d, std::move(*found[winner].coloring), kind), nodes};
        }
    } else {
        for (int k = ub; k >= 1; --k) {
            Feasibility f = try_exactly(d, k, need_acyclic, true);
            nodes += f.nodes;
            if (f.coloring) {
                return {k, make_certificate(d, std::move(*f.coloring), kind), nodes};
            }
        }
    }
    throw std::logic_error("no complete coloring found");  // unreachable: k=1 is vacuous
}

}  // namespace

SolveResult diachromatic_number(const Digraph& d, const SolveOptions& opts) {
    require_nontrivial_order(d);
    SolveResult dc = dichromatic_number(d, opts);
    SolveResult result = descend_from(d, dac_upper_bound(d, dc.value), true,
                                      WitnessKind::dac_lower, opts);
    result.nodes_explored += dc.nodes_explored;
    return result;
}

SolveResult pseudoachromatic_number(const Digraph& d, const SolveOptions& opts) {
    require_nontrivial_order(d);
    int ub = std::min(d.order(), psi_size_bound(d.size()));
    // two singleton classes would need a 2-cycle between them
    if (d.is_asymmetric()) ub = std::min(ub, (d.order() + 1) / 2);
    ub = std::max(ub, 1);
    return descend_from(d, ub, false, WitnessKind::psi_lower, opts);
}

int greedy_extend(const Digraph& d, std::vector<int>& colors) {
    const int n = d.order();
    if (static_cast<int>(colors.size()) != n) {
        throw std::invalid_argument("partial coloring size mismatch");
    }
    int k = 0;
    for (int c : colors) k = std::max(k, c);
    std::vector<VertexSet> classes(k, VertexSet(n));
    for (int v = 0; v < n; ++v) {
        if (colors[v] > 0) classes[colors[v] - 1].add(v);
    }
    for (int v = 0; v < n; ++v) {
        if (colors[v] > 0) continue;
        int chosen = -1;
        for (int cls = 0; cls < k; ++cls) {
            if (!d.out_neighbors(v).intersects(classes[cls]) ||
                !d.in_neighbors(v).intersects(classes[cls])) {
                chosen = cls;
                break;
            }
        }
        if (chosen == -1) {
            classes.emplace_back(n);
            chosen = k++;
        }
        classes[chosen].add(v);
        colors[v] = chosen + 1;
    }
    return k;
}

ColoringCertificate greedy_coloring(const Digraph& d, std::span<const int> order) {
    require_nontrivial_order(d);
    const int n = d.order();
    if (static_cast<int>(order.size()) != n) {
        throw std::invalid_argument("order must list every vertex exactly once");
    }
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) {
            throw std::invalid_argument("order must be a permutation of the vertices");
        }
        seen[v] = 1;
    }

    std::vector<int> colors(n, 0);
    std::vector<VertexSet> classes;
    for (int v : order) {
        int chosen = -1;
        for (std::size_t cls = 0; cls < classes.size(); ++cls) {
            if (!d.out_neighbors(v).intersects(classes[cls]) ||
                !d.in_neighbors(v).intersects(classes[cls])) {
                chosen = static_cast<int>(cls);
                break;
            }
        }
        if (chosen == -1) {
            classes.emplace_back(n);
            chosen = static_cast<int>(classes.size()) - 1;
        }
        classes[chosen].add(v);
        colors[v] = chosen + 1;
    }
    return make_certificate(d, Coloring(std::move(colors)), WitnessKind::dac_lower);
}

std::optional<ColoringCertificate> complete_l_coloring(const Digraph& d, int l,
                                                       const SolveOptions& opts) {
    require_nontrivial_order(d);
    (void)opts;
    if (l < 1 || l > d.order()) return std::nullopt;
    Feasibility f = try_exactly(d, l, true, true);
    if (!f.coloring) return std::nullopt;
    return make_certificate(d, std::move(*f.coloring), WitnessKind::dac_lower);
}

bool is_k_minimal(const Digraph& d) {
    require_nontrivial_order(d);
    const int dac = diachromatic_number(d).value;
    for (const auto& [u, v] : d.arcs()) {
        if (diachromatic_number(d.remove_arc(u, v)).value >= dac) return false;
    }
    return true;
}

}  // namespace diachrome
