#include "diachrome/laws.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "diachrome/dihom.hpp"
#include "diachrome/families.hpp"
#include "diachrome/solver.hpp"

namespace diachrome {

namespace {

constexpr double kLogSlack = 1e-9;

// Wraps the per-instance body with timing and the tested counter.
template <typename Body>
LawReport run_law(std::string id, const Corpus& corpus, Body&& body) {
    LawReport report;
    report.law = std::move(id);
    const auto start = std::chrono::steady_clock::now();
    for (const Digraph& d : corpus) {
        ++report.tested;
        body(d, report);
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

void flag(LawReport& report, const Digraph& d, std::string detail) {
    report.violations.push_back({d, std::move(detail)});
}

std::string values(std::initializer_list<std::pair<const char*, long long>> vs) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : vs) {
        if (!first) out << ' ';
        first = false;
        out << name << '=' << value;
    }
    return out.str();
}

}  // namespace

std::string describe(const Digraph& d) {
    std::ostringstream out;
    out << "n=" << d.order() << " m=" << d.size() << " arcs={";
    bool first = true;
    for (const auto& [u, v] : d.arcs()) {
        if (!first) out << ',';
        first = false;
        out << u << '>' << v;
    }
    out << '}';
    return out.str();
}

LawReport check_chain(const Corpus& corpus) {
    return run_law("chain", corpus, [](const Digraph& d, LawReport& report) {
        const int dc = dichromatic_number(d).value;
        const int dac = diachromatic_number(d).value;
        const int psi = pseudoachromatic_number(d).value;
        if (!(1 <= dc && dc <= dac && dac <= psi && psi <= d.order())) {
            flag(report, d, values({{"dc", dc}, {"dac", dac}, {"psi", psi}, {"n", d.order()}}));
        }
    });
}

LawReport check_size_bound(const Corpus& corpus) {
    return run_law("size-bound", corpus, [](const Digraph& d, LawReport& report) {
        const long long psi = pseudoachromatic_number(d).value;
        if (psi * (psi - 1) > d.size()) {
            flag(report, d, values({{"psi", psi}, {"m", d.size()}}));
        }
    });
}

LawReport check_half_bound(const Corpus& corpus) {
    return run_law("half-bound", corpus, [](const Digraph& d, LawReport& report) {
        const int dc = dichromatic_number(d).value;
        const int dac = diachromatic_number(d).value;
        if (2 * dac > dc + d.order()) {
            flag(report, d, values({{"dc", dc}, {"dac", dac}, {"n", d.order()}}));
        }
    });
}

LawReport check_gap_bound(const Corpus& corpus) {
    // The bound needs both hypotheses: dc >= 2 comes from a directed cycle,
    // and dac <= ceil(n/2) needs every arc asymmetric. A 2-cycle alone
    // already beats the bare non-acyclic form (gap 0 > (2-3)/2).
    return run_law("gap-bound", corpus, [](const Digraph& d, LawReport& report) {
        if (d.is_acyclic() || !d.is_asymmetric()) return;
        const int dc = dichromatic_number(d).value;
        const int dac = diachromatic_number(d).value;
        if (2 * (dac - dc) > d.order() - 3) {
            flag(report, d, values({{"dc", dc}, {"dac", dac}, {"n", d.order()}}));
        }
    });
}

LawReport check_asymmetric_bound(const Corpus& corpus) {
    return run_law("asymmetric-bound", corpus, [](const Digraph& d, LawReport& report) {
        if (!d.is_asymmetric()) return;
        const int dac = diachromatic_number(d).value;
        if (dac > (d.order() + 1) / 2) {
            flag(report, d, values({{"dac", dac}, {"n", d.order()}}));
        }
    });
}

LawReport check_bipartition_bound(const Corpus& corpus) {
    return run_law("bipartition", corpus, [](const Digraph& d, LawReport& report) {
        const int n = d.order();
        if (n < 2 || n > 20) return;
        const int dac = diachromatic_number(d).value;
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            VertexSet x(n), y(n);
            for (int v = 0; v < n; ++v) {
                if (mask & (1u << v)) {
                    x.add(v);
                } else {
                    y.add(v);
                }
            }
            bool all_present = true;
            x.for_each([&](int u) {
                if (!y.is_subset_of(d.out_neighbors(u))) all_present = false;
            });
            if (all_present && dac < std::min(x.size(), y.size())) {
                flag(report, d,
                     values({{"dac", dac}, {"x", x.size()}, {"y", y.size()}}));
                return;
            }
        }
    });
}

LawReport check_removal_laws(const Corpus& corpus) {
    return run_law("removal", corpus, [](const Digraph& d, LawReport& report) {
        const int dac = diachromatic_number(d).value;
        if (d.order() >= 2) {
            for (int u = 0; u < d.order(); ++u) {
                const int after = diachromatic_number(d.remove_vertex(u)).value;
                if (after < dac - 1 || after > dac) {
                    flag(report, d,
                         values({{"vertex", u}, {"dac", dac}, {"dac_minus_u", after}}));
                }
            }
        }
        for (const auto& [u, v] : d.arcs()) {
            const int after = diachromatic_number(d.remove_arc(u, v)).value;
            if (after < dac - 1 || after > dac + 1) {
                flag(report, d,
                     values({{"from", u}, {"to", v}, {"dac", dac}, {"dac_minus_f", after}}));
            }
        }
    });
}

LawReport check_nordhaus_gaddum(const Corpus& corpus) {
    std::size_t probe_exceed = 0;
    LawReport report = run_law("nordhaus-gaddum", corpus, [&](const Digraph& d, LawReport& rep) {
        const long long n = d.order();
        const Digraph comp = d.complement();
        const long long dc = dichromatic_number(d).value;
        const long long dac = diachromatic_number(d).value;
        const long long dc_c = dichromatic_number(comp).value;
        if (3 * (dc + dc_c) > 4 * n + 2) {
            flag(rep, d, "sum " + values({{"dc", dc}, {"dc_c", dc_c}, {"n", n}}));
        }
        if (9 * dc * dc_c > (2 * n + 1) * (2 * n + 1)) {
            flag(rep, d, "product " + values({{"dc", dc}, {"dc_c", dc_c}, {"n", n}}));
        }
        if (2 * (dac + dc_c) > 3 * n + 1) {
            flag(rep, d, "sum " + values({{"dac", dac}, {"dc_c", dc_c}, {"n", n}}));
        }
        if (16 * dac * dc_c > (3 * n + 1) * (3 * n + 1)) {
            flag(rep, d, "product " + values({{"dac", dac}, {"dc_c", dc_c}, {"n", n}}));
        }
        if (2 * dac + dc_c > 2 * n + 1) {
            flag(rep, d, "intermediate " + values({{"dac", dac}, {"dc_c", dc_c}, {"n", n}}));
        }
        // informational probe: the proof-side variant with dac on both terms
        const long long dac_c = diachromatic_number(comp).value;
        if (2 * (dac + dac_c) > 3 * n + 1) ++probe_exceed;
    });
    report.notes.push_back("probe dac(D)+dac(Dc) <= floor((3n+1)/2): " +
                           std::to_string(probe_exceed) + " exceedances");
    return report;
}

LawReport check_interpolation(const Corpus& corpus) {
    return run_law("interpolation", corpus, [](const Digraph& d, LawReport& report) {
        const int dc = dichromatic_number(d).value;
        const int dac = diachromatic_number(d).value;
        for (int l = dc; l <= dac; ++l) {
            auto cert = complete_l_coloring(d, l);
            if (!cert || !cert->acyclic || !cert->complete ||
                cert->coloring.color_count() != l) {
                flag(report, d, "no complete acyclic coloring at " +
                                    values({{"l", l}, {"dc", dc}, {"dac", dac}}));
            }
        }
        if (complete_l_coloring(d, dac + 1)) {
            flag(report, d, "unexpected coloring above " + values({{"dac", dac}}));
        }
    });
}

LawReport check_tournament_bounds(const Corpus& corpus) {
    LawReport report;
    report.law = "tournament-bounds";
    const auto start = std::chrono::steady_clock::now();
    for (const Digraph& d : corpus) {
        if (!d.is_tournament() || d.order() < 1) continue;
        ++report.tested;
        const long long n = d.order();
        const long long dc = dichromatic_number(d).value;
        const long long dac = diachromatic_number(d).value;
        if (dac > (n + 1) / 2) {
            flag(report, d, "upper " + values({{"dac", dac}, {"n", n}}));
        }
        if (n >= 3) {
            const double lower = static_cast<double>(n) / (2.0 * std::log2((2.0 * n + 2.0) / 3.0));
            if (static_cast<double>(dac) + kLogSlack < lower) {
                flag(report, d, "partition lower " + values({{"dac", dac}, {"n", n}}));
            }
        }
        if (2 * dc * dac < n) {
            flag(report, d, "dc*dac " + values({{"dc", dc}, {"dac", dac}, {"n", n}}));
        }
        const long long comps = static_cast<long long>(d.strong_components().size());
        if (2 * dac < comps) {
            flag(report, d, "components " + values({{"dac", dac}, {"components", comps}}));
        }
        if (dac * (dac + 1) < n) {
            flag(report, d, "sqrt lower " + values({{"dac", dac}, {"n", n}}));
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

LawReport check_k_minimal(const Corpus& corpus) {
    return run_law("k-minimal", corpus, [](const Digraph& d, LawReport& report) {
        const long long dac = diachromatic_number(d).value;
        const bool by_deletion = is_k_minimal(d);
        const bool by_size = d.size() == dac * (dac - 1);
        if (by_deletion != by_size) {
            flag(report, d,
                 values({{"dac", dac}, {"m", d.size()}, {"by_deletion", by_deletion}}));
        }
    });
}

LawReport check_dihom_steps(const Corpus& corpus) {
    return run_law("dihom-steps", corpus, [](const Digraph& d, LawReport& report) {
        const int n = d.order();
        if (n < 2) return;
        const int dc = dichromatic_number(d).value;
        const int dac = diachromatic_number(d).value;
        const int dc_c = dichromatic_number(d.complement()).value;
        bool any_pair = false;
        bool preserved = false;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (d.adjacent(u, v)) continue;
                any_pair = true;
                const Digraph image = elementary_image(d, u, v);
                const int dc_e = dichromatic_number(image).value;
                const int dac_e = diachromatic_number(image).value;
                const int dcc_e = dichromatic_number(image.complement()).value;
                if (dc_e < dc || dc_e > dc + 1) {
                    flag(report, d, "dc step " + values({{"u", u}, {"v", v}, {"dc", dc},
                                                         {"dc_e", dc_e}}));
                }
                if (dac_e < dac - 2 || dac_e > dac) {
                    flag(report, d, "dac step " + values({{"u", u}, {"v", v}, {"dac", dac},
                                                          {"dac_e", dac_e}}));
                }
                if (dcc_e < dc_c - 1 || dcc_e > dc_c + 1) {
                    flag(report, d, "complement step " + values({{"u", u}, {"v", v},
                                                                 {"dc_c", dc_c},
                                                                 {"dcc_e", dcc_e}}));
                }
                if (dac_e == dac) preserved = true;
            }
        }
        if (any_pair && !preserved) {
            flag(report, d, "no identification preserves " + values({{"dac", dac}}));
        }
    });
}

namespace {

constexpr LawEntry kRegistry[] = {
    {"chain", check_chain},
    {"size-bound", check_size_bound},
    {"half-bound", check_half_bound},
    {"gap-bound", check_gap_bound},
    {"asymmetric-bound", check_asymmetric_bound},
    {"bipartition", check_bipartition_bound},
    {"removal", check_removal_laws},
    {"nordhaus-gaddum", check_nordhaus_gaddum},
    {"interpolation", check_interpolation},
    {"tournament-bounds", check_tournament_bounds},
    {"k-minimal", check_k_minimal},
    {"dihom-steps", check_dihom_steps},
};

}  // namespace

std::span<const LawEntry> law_registry() { return kRegistry; }

Corpus exhaustive_digraphs(int n) {
    if (n < 0 || n > 5) throw std::invalid_argument("exhaustive digraphs limited to n <= 5");
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v) pairs.emplace_back(u, v);
        }
    }
    Corpus corpus;
    corpus.reserve(std::size_t{1} << pairs.size());
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask & (1u << i)) arcs.push_back(pairs[i]);
        }
        corpus.emplace_back(n, arcs);
    }
    return corpus;
}

Corpus exhaustive_tournaments(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("exhaustive tournaments limited to n <= 6");
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    Corpus corpus;
    corpus.reserve(std::size_t{1} << pairs.size());
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Arc> arcs;
        arcs.reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto& [u, v] = pairs[i];
            if (mask & (1u << i)) {
                arcs.emplace_back(u, v);
            } else {
                arcs.emplace_back(v, u);
            }
        }
        corpus.emplace_back(n, arcs);
    }
    return corpus;
}

Corpus random_digraph_corpus(int n, int count, std::uint64_t seed, double p) {
    Corpus corpus;
    corpus.reserve(count);
    for (int i = 0; i < count; ++i) corpus.push_back(random_digraph(n, p, seed + i));
    return corpus;
}

Corpus random_tournament_corpus(int n, int count, std::uint64_t seed) {
    Corpus corpus;
    corpus.reserve(count);
    for (int i = 0; i < count; ++i) corpus.push_back(random_tournament(n, seed + i));
    return corpus;
}

void print_report(std::ostream& out, const LawReport& report) {
    out << "law " << report.law << ": tested=" << report.tested
        << " violations=" << report.violations.size() << '\n';
    for (const LawViolation& violation : report.violations) {
        out << "  violation: " << describe(violation.instance) << " " << violation.detail
            << '\n';
    }
    for (const std::string& note : report.notes) {
        out << "  note: " << note << '\n';
    }
}

}  // namespace diachrome
