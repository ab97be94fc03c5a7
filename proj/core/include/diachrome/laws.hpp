#ifndef DIACHROME_LAWS_HPP
#define DIACHROME_LAWS_HPP

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diachrome/digraph.hpp"

namespace diachrome {

struct LawViolation {
    Digraph instance;
    std::string detail;
};

/// Outcome of one law over one corpus. Violations collect every witness;
/// notes carry informational probes that never fail the law.
struct LawReport {
    std::string law;
    std::size_t tested = 0;
    std::vector<LawViolation> violations;
    std::vector<std::string> notes;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return violations.empty(); }
};

using Corpus = std::vector<Digraph>;

/// 1 <= dc <= dac <= psi <= n.
LawReport check_chain(const Corpus& corpus);

/// psi(psi-1) <= m.
LawReport check_size_bound(const Corpus& corpus);

/// 2*dac <= dc + n.
LawReport check_half_bound(const Corpus& corpus);

/// dac - dc <= (n-3)/2 on asymmetric non-acyclic digraphs.
LawReport check_gap_bound(const Corpus& corpus);

/// dac <= ceil(n/2) on asymmetric digraphs.
LawReport check_asymmetric_bound(const Corpus& corpus);

/// dac >= min(|X|,|Y|) whenever every X->Y arc is present.
LawReport check_bipartition_bound(const Corpus& corpus);

/// dac-1 <= dac(D-u) <= dac for vertices; dac-1 <= dac(D-f) <= dac+1 for arcs.
LawReport check_removal_laws(const Corpus& corpus);

/// dc(D)+dc(Dc) <= ceil(4n/3), dc(D)dc(Dc) <= ((2n+1)/3)^2,
/// dac(D)+dc(Dc) <= ceil(3n/2), dac(D)dc(Dc) <= ((3n+1)/4)^2, and the
/// intermediate 2*dac(D)+dc(Dc) <= 2n+1. All comparisons are integer-exact.
/// Also probes dac(D)+dac(Dc) <= floor((3n+1)/2) informationally.
LawReport check_nordhaus_gaddum(const Corpus& corpus);

/// A complete acyclic l-coloring exists for every l in [dc,dac] and none
/// for l = dac+1.
LawReport check_interpolation(const Corpus& corpus);

/// On tournaments: n/(2*log2((2n+2)/3)) <= dac <= ceil(n/2), 2*dc*dac >= n,
/// dac >= ceil(components/2), and dac*(dac+1) >= n. Non-tournaments are
/// skipped.
LawReport check_tournament_bounds(const Corpus& corpus);

/// Arc-deletion minimality agrees with the size test m == dac*(dac-1).
LawReport check_k_minimal(const Corpus& corpus);

/// Per identification of nonadjacent u,v:
/// dc <= dc(e(D)) <= dc+1, dac-2 <= dac(e(D)) <= dac,
/// dc(Dc)-1 <= dc(e(D)c) <= dc(Dc)+1, and some identification of every
/// noncomplete digraph preserves dac.
LawReport check_dihom_steps(const Corpus& corpus);

struct LawEntry {
    std::string_view id;
    LawReport (*check)(const Corpus&);
};

/// Every law, keyed by the id the CLI accepts.
std::span<const LawEntry> law_registry();

/// All digraphs of order n (one per arc subset). Practical for n <= 4.
Corpus exhaustive_digraphs(int n);

/// All tournaments of order n (one per orientation). Practical for n <= 6.
Corpus exhaustive_tournaments(int n);

Corpus random_digraph_corpus(int n, int count, std::uint64_t seed, double p = 0.5);
Corpus random_tournament_corpus(int n, int count, std::uint64_t seed);

/// One-line digest of a digraph for violation reports.
std::string describe(const Digraph& d);

/// "law <id>: tested=N violations=V" plus indented witnesses and notes.
void print_report(std::ostream& out, const LawReport& report);

}  // namespace diachrome

#endif
