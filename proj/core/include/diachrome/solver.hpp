#ifndef DIACHROME_SOLVER_HPP
#define DIACHROME_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "diachrome/coloring.hpp"
#include "diachrome/digraph.hpp"

namespace diachrome {

struct SolveOptions {
    /// Number of worker threads for the per-target feasibility tests.
    /// The reported parameter value and certificate are identical for every
    /// thread count; only nodes_explored varies.
    int threads = 1;
};

struct SolveResult {
    int value = 0;
    ColoringCertificate certificate;
    std::uint64_t nodes_explored = 0;
};

/// Smallest k admitting an acyclic k-coloring. Requires order >= 1.
SolveResult dichromatic_number(const Digraph& d, const SolveOptions& opts = {});

/// Largest k admitting a complete acyclic k-coloring. Requires order >= 1.
SolveResult diachromatic_number(const Digraph& d, const SolveOptions& opts = {});

/// Largest k admitting a complete (not necessarily acyclic) k-coloring.
SolveResult pseudoachromatic_number(const Digraph& d, const SolveOptions& opts = {});

/// Colors vertices in the given order; each joins the least-indexed class
/// whose members miss its out-neighborhood or its in-neighborhood entirely,
/// else opens a new class. The result is complete and acyclic.
/// `order` must be a permutation of the vertices.
ColoringCertificate greedy_coloring(const Digraph& d, std::span<const int> order);

/// A complete acyclic coloring with exactly l colors, when one exists.
/// Absence is a value, not an error: std::nullopt means no such coloring.
std::optional<ColoringCertificate> complete_l_coloring(const Digraph& d, int l,
                                                       const SolveOptions& opts = {});

/// True iff deleting any single arc lowers the diachromatic number.
bool is_k_minimal(const Digraph& d);

/// Largest k with k(k-1) <= m; upper bound on the pseudoachromatic number.
int psi_size_bound(int m);

/// Least applicable upper bound for the diachromatic number, given dc(d).
int dac_upper_bound(const Digraph& d, int dc_value);

/// Extends a partial coloring (0 = uncolored) greedily over the uncolored
/// vertices in ascending order, using the same class-admission rule as
/// greedy_coloring. Returns the final color count.
int greedy_extend(const Digraph& d, std::vector<int>& colors);

}  // namespace diachrome

#endif
