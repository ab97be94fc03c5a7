#ifndef DIACHROME_COLORING_HPP
#define DIACHROME_COLORING_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "diachrome/digraph.hpp"

namespace diachrome {

/// Surjective assignment of colors 1..k to vertices 0..n-1.
class Coloring {
public:
    /// Validates that colors[v] lies in 1..k and that all of 1..k are used,
    /// where k = max color; throws std::invalid_argument otherwise.
    explicit Coloring(std::vector<int> colors);

    int size() const { return static_cast<int>(colors_.size()); }
    int color_count() const { return k_; }
    int color_of(int v) const { return colors_[v]; }
    const std::vector<int>& colors() const { return colors_; }

    /// Class i of the result holds color i+1; k nonempty disjoint sets.
    std::vector<VertexSet> chromatic_classes() const;

    bool operator==(const Coloring&) const = default;

private:
    std::vector<int> colors_;
    int k_ = 0;
};

/// True iff every chromatic class induces an acyclic subdigraph.
bool is_acyclic_coloring(const Digraph& d, const Coloring& c);

/// True iff every ordered pair (i,j) of distinct colors has an arc from
/// class i to class j. Both directions are required independently.
bool is_complete_coloring(const Digraph& d, const Coloring& c);

/// Ordered color pairs (i,j) with no class-i to class-j arc, lexicographic.
std::vector<std::pair<int, int>> missing_pairs(const Digraph& d, const Coloring& c);

/// What a verified coloring certifies about the colored digraph.
enum class WitnessKind { none, dc_upper, dac_lower, psi_lower };

std::string_view to_string(WitnessKind kind);

/// Coloring bundled with the digraph it colors and verified predicate flags.
struct ColoringCertificate {
    Digraph digraph;
    Coloring coloring;
    bool acyclic = false;
    bool complete = false;
    WitnessKind witnesses = WitnessKind::none;

    int color_count() const { return coloring.color_count(); }

    /// Re-runs both predicates; true iff the stored flags agree.
    bool verify() const;
};

/// Runs both predicates and freezes the outcome into a certificate.
ColoringCertificate make_certificate(Digraph d, Coloring c,
                                     WitnessKind witnesses = WitnessKind::none);

/// Coloring text format: one line "v c" per vertex; '#' lines are comments.
Coloring parse_coloring(std::istream& in);
Coloring parse_coloring(std::string_view text);
void write_coloring(std::ostream& out, const Coloring& c);
std::string to_text(const Coloring& c);

}  // namespace diachrome

#endif
