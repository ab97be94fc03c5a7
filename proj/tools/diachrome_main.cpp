// Command-line front end: generation, solving, constructive colorings,
// dihomomorphism walks, and law verification over DGR files.
//
// Exit codes: 0 success, 1 violation or not-found, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "diachrome/coloring.hpp"
#include "diachrome/digraph_io.hpp"
#include "diachrome/dihom.hpp"
#include "diachrome/discordant.hpp"
#include "diachrome/families.hpp"
#include "diachrome/laws.hpp"
#include "diachrome/solver.hpp"

namespace {

using namespace diachrome;

constexpr int kExitSuccess = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char delim) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, delim)) parts.push_back(part);
    return parts;
}

long parse_long(const std::string& token, const std::string& what) {
    try {
        std::size_t used = 0;
        long value = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw UsageError("bad " + what + ": '" + token + "'");
    }
}

double parse_double(const std::string& token, const std::string& what) {
    try {
        std::size_t used = 0;
        double value = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw UsageError("bad " + what + ": '" + token + "'");
    }
}

// family grammar: name:arg,arg,...
Digraph build_family(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<std::string> args;
    if (colon != std::string::npos) args = split(spec.substr(colon + 1), ',');

    auto want = [&](std::size_t count) {
        if (args.size() != count) {
            throw UsageError("family '" + name + "' expects " + std::to_string(count) +
                             " argument(s)");
        }
    };
    if (name == "transitive") {
        want(1);
        return transitive_tournament(static_cast<int>(parse_long(args[0], "order")));
    }
    if (name == "matching") {
        want(1);
        return oriented_matching(static_cast<int>(parse_long(args[0], "size")));
    }
    if (name == "complete-symmetric") {
        want(1);
        return complete_symmetric(static_cast<int>(parse_long(args[0], "order")));
    }
    if (name == "circulant") {
        if (args.size() < 2) throw UsageError("circulant expects m,j1[,j2,...]");
        CirculantSpec spec_out;
        spec_out.half_order = static_cast<int>(parse_long(args[0], "half-order"));
        for (std::size_t i = 1; i < args.size(); ++i) {
            spec_out.connection.push_back(static_cast<int>(parse_long(args[i], "connection")));
        }
        return circulant_tournament(spec_out);
    }
    if (name == "random") {
        want(3);
        return random_digraph(static_cast<int>(parse_long(args[0], "order")),
                              parse_double(args[1], "probability"),
                              static_cast<std::uint64_t>(parse_long(args[2], "seed")));
    }
    if (name == "random-tournament") {
        want(2);
        return random_tournament(static_cast<int>(parse_long(args[0], "order")),
                                 static_cast<std::uint64_t>(parse_long(args[1], "seed")));
    }
    throw UsageError("unknown family '" + name + "'");
}

void emit_coloring_file(const std::string& path, const Coloring& coloring) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    write_coloring(out, coloring);
}

// shared output block for any certificate-producing command
void print_certificate(const ColoringCertificate& cert) {
    if (!cert.verify()) {
        throw std::logic_error("certificate failed re-validation before printing");
    }
    std::cout << "colors = " << cert.coloring.color_count() << '\n';
    std::cout << "acyclic = " << (cert.acyclic ? "true" : "false") << '\n';
    std::cout << "complete = " << (cert.complete ? "true" : "false") << '\n';
    write_coloring(std::cout, cert.coloring);
}

struct SolveCommand {
    std::string param;
    std::string file;
    std::string coloring_out;
    int threads = 1;

    int run() const {
        Digraph d = read_dgr_file(file);
        if (d.order() > 12) {
            std::cerr << "warning: order " << d.order()
                      << " is above the exact-solver comfort ceiling of 12; "
                         "this may take a while\n";
        }
        SolveOptions opts{threads};
        SolveResult result = param == "dc"    ? dichromatic_number(d, opts)
                             : param == "dac" ? diachromatic_number(d, opts)
                                              : pseudoachromatic_number(d, opts);
        if (!result.certificate.verify()) {
            throw std::logic_error("certificate failed re-validation before printing");
        }
        std::cout << param << " = " << result.value << '\n';
        write_coloring(std::cout, result.certificate.coloring);
        emit_coloring_file(coloring_out, result.certificate.coloring);
        return kExitSuccess;
    }
};

struct GreedyCommand {
    std::string order = "natural";
    std::string perm;
    std::string file;
    std::string coloring_out;

    int run() const {
        Digraph d = read_dgr_file(file);
        std::vector<int> sequence;
        if (order == "natural") {
            sequence.resize(d.order());
            for (int v = 0; v < d.order(); ++v) sequence[v] = v;
        } else {
            if (perm.empty()) throw UsageError("--order given requires --perm v0,v1,...");
            for (const std::string& token : split(perm, ',')) {
                sequence.push_back(static_cast<int>(parse_long(token, "vertex")));
            }
        }
        ColoringCertificate cert = greedy_coloring(d, sequence);
        print_certificate(cert);
        emit_coloring_file(coloring_out, cert.coloring);
        return kExitSuccess;
    }
};

struct ConstructCommand {
    std::string family;
    std::string file;
    std::string coloring_out;

    int run() const {
        const auto colon = family.find(':');
        const std::string name = family.substr(0, colon);
        std::vector<std::string> args;
        if (colon != std::string::npos) args = split(family.substr(colon + 1), ',');

        if (name == "discordant") {
            if (file.empty()) throw UsageError("construct --family discordant needs a file");
            Digraph t = read_dgr_file(file);
            DiscordantResult result = discordant_subtournament(t);
            std::cout << "anchor = " << result.anchor_arc.first << ' '
                      << result.anchor_arc.second << '\n';
            std::cout << "directed-triangles = " << result.directed_triangle_score << '\n';
            std::cout << "transitive-triangles = " << result.transitive_triangle_score << '\n';
            std::cout << "size = " << result.vertices.size() << '\n';
            std::cout << "order =";
            for (int v : result.acyclic_order) std::cout << ' ' << v;
            std::cout << '\n';
            return kExitSuccess;
        }
        if (name == "discordant-partition") {
            if (file.empty()) {
                throw UsageError("construct --family discordant-partition needs a file");
            }
            ColoringCertificate cert = discordant_partition_coloring(read_dgr_file(file));
            print_certificate(cert);
            emit_coloring_file(coloring_out, cert.coloring);
            return kExitSuccess;
        }

        std::optional<ColoringCertificate> cert;
        if (name == "matching") {
            if (args.size() != 1) throw UsageError("matching expects one size argument");
            cert = matching_coloring(static_cast<int>(parse_long(args[0], "size")));
        } else if (name == "transitive") {
            if (args.size() != 1) throw UsageError("transitive expects one order argument");
            cert = transitive_coloring(static_cast<int>(parse_long(args[0], "order")));
        } else if (name == "circulant") {
            if (args.size() < 2) throw UsageError("circulant expects m,j1[,j2,...]");
            CirculantSpec spec;
            spec.half_order = static_cast<int>(parse_long(args[0], "half-order"));
            for (std::size_t i = 1; i < args.size(); ++i) {
                spec.connection.push_back(static_cast<int>(parse_long(args[i], "connection")));
            }
            cert = circulant_coloring(spec);
        } else {
            throw UsageError("unknown constructive family '" + name + "'");
        }
        print_certificate(*cert);
        emit_coloring_file(coloring_out, cert->coloring);
        return kExitSuccess;
    }
};

struct DihomCommand {
    std::string file;
    int level = -1;

    int run() const {
        Digraph d = read_dgr_file(file);
        if (level >= 0) {
            const int dc = dichromatic_number(d).value;
            const int dac = diachromatic_number(d).value;
            if (level < dc || level > dac) {
                std::cout << "no image with dc = " << level << " (interval is [" << dc << ","
                          << dac << "])\n";
                return kExitViolation;
            }
            Digraph image = image_with_dichromatic(d, level);
            std::cout << "# image with dc = " << level << '\n';
            write_dgr(std::cout, image);
            return kExitSuccess;
        }
        DihomSequence seq = interpolation_sequence(d);
        for (std::size_t i = 0; i < seq.images.size(); ++i) {
            const Digraph& image = seq.images[i];
            std::cout << 'D' << i << ": n=" << image.order() << " m=" << image.size()
                      << " dc=" << dichromatic_number(image).value << '\n';
            if (i < seq.steps.size()) {
                std::cout << "step " << i + 1 << ": identify " << seq.steps[i].identified
                          << " with " << seq.steps[i].survivor << " -> "
                          << seq.steps[i].survivor << '\n';
            }
        }
        std::cout << "K_" << seq.final_image().order() << '\n';
        return kExitSuccess;
    }
};

struct VerifyCommand {
    std::vector<std::string> laws{"all"};
    std::vector<std::string> corpus_specs;
    std::string json_path;
    std::string coloring_file;
    std::string digraph_file;

    Corpus build_corpus() const {
        Corpus corpus;
        for (const std::string& spec : corpus_specs) {
            const auto colon = spec.find(':');
            const std::string name = spec.substr(0, colon);
            if (name == "exhaustive" || name == "tournaments" || name == "random" ||
                name == "random-tournaments") {
                std::vector<std::string> args;
                if (colon != std::string::npos) args = split(spec.substr(colon + 1), ',');
                if (name == "exhaustive") {
                    if (args.size() != 1) throw UsageError("exhaustive expects :n");
                    Corpus part =
                        exhaustive_digraphs(static_cast<int>(parse_long(args[0], "order")));
                    corpus.insert(corpus.end(), part.begin(), part.end());
                } else if (name == "tournaments") {
                    if (args.size() != 1) throw UsageError("tournaments expects :n");
                    Corpus part =
                        exhaustive_tournaments(static_cast<int>(parse_long(args[0], "order")));
                    corpus.insert(corpus.end(), part.begin(), part.end());
                } else if (name == "random") {
                    if (args.size() != 3 && args.size() != 4) {
                        throw UsageError("random expects :n,count,seed[,p]");
                    }
                    const double p = args.size() == 4 ? parse_double(args[3], "probability") : 0.5;
                    Corpus part = random_digraph_corpus(
                        static_cast<int>(parse_long(args[0], "order")),
                        static_cast<int>(parse_long(args[1], "count")),
                        static_cast<std::uint64_t>(parse_long(args[2], "seed")), p);
                    corpus.insert(corpus.end(), part.begin(), part.end());
                } else {
                    if (args.size() != 3) throw UsageError("random-tournaments expects :n,count,seed");
                    Corpus part = random_tournament_corpus(
                        static_cast<int>(parse_long(args[0], "order")),
                        static_cast<int>(parse_long(args[1], "count")),
                        static_cast<std::uint64_t>(parse_long(args[2], "seed")));
                    corpus.insert(corpus.end(), part.begin(), part.end());
                }
            } else {
                corpus.push_back(read_dgr_file(spec));
            }
        }
        return corpus;
    }

    int run() const {
        if (!coloring_file.empty()) {
            if (digraph_file.empty()) {
                throw UsageError("verify --coloring needs a digraph file argument");
            }
            Digraph d = read_dgr_file(digraph_file);
            std::ifstream in(coloring_file);
            if (!in) throw UsageError("cannot open file: " + coloring_file);
            Coloring coloring = parse_coloring(in);
            if (coloring.size() != d.order()) {
                throw UsageError("coloring covers " + std::to_string(coloring.size()) +
                                 " vertices, digraph has " + std::to_string(d.order()));
            }
            const bool acyclic = is_acyclic_coloring(d, coloring);
            const bool complete = is_complete_coloring(d, coloring);
            std::cout << "acyclic = " << (acyclic ? "true" : "false") << '\n';
            std::cout << "complete = " << (complete ? "true" : "false") << '\n';
            std::cout << "colors = " << coloring.color_count() << '\n';
            for (const auto& [i, j] : missing_pairs(d, coloring)) {
                std::cout << "missing " << i << " -> " << j << '\n';
            }
            return acyclic && complete ? kExitSuccess : kExitViolation;
        }

        if (corpus_specs.empty()) throw UsageError("verify needs at least one --corpus");
        Corpus corpus = build_corpus();

        std::vector<const LawEntry*> selected;
        const bool all = std::find(laws.begin(), laws.end(), "all") != laws.end();
        for (const LawEntry& entry : law_registry()) {
            if (all || std::find(laws.begin(), laws.end(), entry.id) != laws.end()) {
                selected.push_back(&entry);
            }
        }
        for (const std::string& id : laws) {
            if (id == "all") continue;
            bool known = false;
            for (const LawEntry& entry : law_registry()) known |= entry.id == id;
            if (!known) throw UsageError("unknown law '" + id + "'");
        }

        bool violated = false;
        nlohmann::json summary = nlohmann::json::array();
        for (const LawEntry* entry : selected) {
            LawReport report = entry->check(corpus);
            print_report(std::cout, report);
            violated |= !report.passed();
            summary.push_back({{"law", report.law},
                               {"tested", report.tested},
                               {"violations", report.violations.size()}});
        }
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) throw UsageError("cannot write " + json_path);
            out << summary.dump(2) << '\n';
        }
        return violated ? kExitViolation : kExitSuccess;
    }
};

struct GenCommand {
    std::string family;
    std::string out_path;

    int run() const {
        Digraph d = build_family(family);
        if (out_path.empty()) {
            write_dgr(std::cout, d);
        } else {
            std::ofstream out(out_path);
            if (!out) throw UsageError("cannot write " + out_path);
            write_dgr(out, d);
        }
        return kExitSuccess;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact diachromatic machinery over DGR digraph files"};
    app.require_subcommand(1);

    SolveCommand solve_cmd;
    auto* solve = app.add_subcommand("solve", "compute dc, dac, or psi with a certificate");
    solve->add_option("--param", solve_cmd.param, "parameter: dc, dac, or psi")
        ->required()
        ->check(CLI::IsMember({"dc", "dac", "psi"}));
    solve->add_option("--threads", solve_cmd.threads, "worker threads")->check(CLI::Range(1, 64));
    solve->add_option("--coloring-out", solve_cmd.coloring_out, "write the coloring here");
    solve->add_option("file", solve_cmd.file, "DGR input")->required();

    GreedyCommand greedy_cmd;
    auto* greedy = app.add_subcommand("greedy", "run the greedy coloring procedure");
    greedy->add_option("--order", greedy_cmd.order, "vertex order")
        ->check(CLI::IsMember({"natural", "given"}));
    greedy->add_option("--perm", greedy_cmd.perm, "comma-separated order for --order given");
    greedy->add_option("--coloring-out", greedy_cmd.coloring_out, "write the coloring here");
    greedy->add_option("file", greedy_cmd.file, "DGR input")->required();

    ConstructCommand construct_cmd;
    auto* construct = app.add_subcommand("construct", "constructive colorings and extractions");
    construct
        ->add_option("--family", construct_cmd.family,
                     "matching:m | circulant:m,j1[,...] | transitive:n | discordant | "
                     "discordant-partition")
        ->required();
    construct->add_option("--coloring-out", construct_cmd.coloring_out,
                          "write the coloring here");
    construct->add_option("file", construct_cmd.file, "DGR input (discordant families)");

    DihomCommand dihom_cmd;
    auto* dihom = app.add_subcommand("dihom", "identification sequence down to a complete image");
    dihom->add_option("--level", dihom_cmd.level,
                      "print the image with this dichromatic number instead");
    dihom->add_option("file", dihom_cmd.file, "DGR input")->required();

    VerifyCommand verify_cmd;
    auto* verify = app.add_subcommand("verify", "check laws over corpora, or check a coloring");
    verify->add_option("--laws", verify_cmd.laws, "law ids or 'all'")->delimiter(',');
    verify->add_option("--corpus", verify_cmd.corpus_specs,
                       "exhaustive:n | tournaments:n | random:n,count,seed[,p] | "
                       "random-tournaments:n,count,seed | file.dgr (repeatable)");
    verify->add_option("--json", verify_cmd.json_path, "write a machine-readable summary");
    verify->add_option("--coloring", verify_cmd.coloring_file,
                       "check this coloring file against the digraph argument");
    verify->add_option("file", verify_cmd.digraph_file, "DGR input for --coloring");

    GenCommand gen_cmd;
    auto* gen = app.add_subcommand("gen", "emit a family member as DGR");
    gen->add_option("--family", gen_cmd.family,
                    "transitive:n | matching:m | circulant:m,j1[,...] | complete-symmetric:k | "
                    "random:n,p,seed | random-tournament:n,seed")
        ->required();
    gen->add_option("--out", gen_cmd.out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return solve_cmd.run();
        if (greedy->parsed()) return greedy_cmd.run();
        if (construct->parsed()) return construct_cmd.run();
        if (dihom->parsed()) return dihom_cmd.run();
        if (verify->parsed()) return verify_cmd.run();
        if (gen->parsed()) return gen_cmd.run();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitViolation;
    }
    return kExitUsage;
}
