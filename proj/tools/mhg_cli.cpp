// Command-line front end: generation, bounds, spectrum, verification,
// pair-graph analysis and the micro-scale exhaustive search.
//
// Exit codes: 0 success / verified, 1 verification returned false,
// 2 operational error (bad arguments, parse failure, budget exhaustion).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mhg/constructions.hpp"
#include "mhg/mhg_io.hpp"
#include "mhg/solver.hpp"
#include "mhg/spec_set.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitError = 2;

mhg::MixedHypergraph load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return mhg::parse_mhg(buffer.str());
}

mhg::EdgeKind parse_kind(const std::string& kind) {
    if (kind == "C") return mhg::EdgeKind::C;
    if (kind == "D") return mhg::EdgeKind::D;
    throw std::runtime_error("kind must be C or D, got '" + kind + "'");
}

int run_gen(const mhg::SpecSet& s, const std::string& variant_name,
            const std::string& out_path) {
    const auto variant = mhg::variant_from_string(variant_name);
    if (!variant) {
        throw std::runtime_error("unknown variant '" + variant_name +
                                 "' (expected full, full-g, d-min or c-min)");
    }
    const mhg::MixedHypergraph h = mhg::build(s, *variant);
    const std::string document = mhg::write_mhg(h);
    std::ostringstream counts;
    counts << "vertices " << h.num_vertices() << " / c-edges " << h.c_edges().size()
           << " / d-edges " << h.d_edges().size() << "\n";
    if (out_path.empty()) {
        std::cout << document;
        std::cerr << counts.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << document)) {
            throw std::runtime_error("cannot write '" + out_path + "'");
        }
        std::cout << counts.str();
    }
    return kExitOk;
}

int run_bounds(const mhg::SpecSet& s) {
    std::cout << "delta " << mhg::delta(s) << " / delta_D " << mhg::delta_d(s)
              << " / delta_C " << mhg::delta_c(s) << "\n";
    return kExitOk;
}

int run_spectrum(const std::string& path, std::optional<int> max_colors,
                 const mhg::EnumerationLimits& limits) {
    const mhg::MixedHypergraph h = load_file(path);
    const auto colorings = mhg::enumerate_strict_colorings(h, max_colors, limits);
    for (const auto& [k, list] : colorings) {
        std::cout << k << ' ' << list.size() << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& path, const mhg::SpecSet& s,
               const std::string& minimality_kind, const mhg::EnumerationLimits& limits) {
    const mhg::MixedHypergraph h = load_file(path);
    const mhg::OneRealizationReport report = mhg::is_one_realization(h, s, limits);
    std::cout << "spectrum:\n";
    for (const auto& [k, r] : report.spectrum.counts) {
        std::cout << k << ' ' << r << "\n";
    }
    std::cout << "one-realization of " << s.to_string() << ": "
              << (report.verdict ? "yes" : "no") << "\n";
    for (const auto& d : report.discrepancies) {
        std::cout << "discrepancy k=" << d.k << ": expected " << d.expected << ", actual "
                  << d.actual << "\n";
    }
    bool ok = report.verdict;
    if (!minimality_kind.empty()) {
        const mhg::EdgeKind kind = parse_kind(minimality_kind);
        const mhg::MinimalityReport minimality = mhg::minimality_check(h, s, kind, limits);
        const std::size_t edge_count =
            kind == mhg::EdgeKind::C ? h.c_edges().size() : h.d_edges().size();
        if (minimality.minimal) {
            std::cout << "minimality " << minimality_kind << ": minimal (" << edge_count
                      << " edges, 0 safe deletions)\n";
        } else {
            std::cout << "minimality " << minimality_kind << ": NOT minimal; safe deletions:";
            for (const mhg::Edge& e : minimality.safe_deletions) {
                std::cout << " {";
                for (std::size_t i = 0; i < e.size(); ++i) {
                    std::cout << (i ? "," : "") << e[i];
                }
                std::cout << "}";
            }
            std::cout << "\n";
            ok = false;
        }
    }
    return ok ? kExitOk : kExitVerdictFalse;
}

int run_pair_graphs(const std::string& path, const mhg::SpecSet& s,
                    const mhg::EnumerationLimits& limits) {
    const mhg::MixedHypergraph h = load_file(path);
    const int k = s.smallest();
    const auto colorings = mhg::enumerate_strict_colorings(h, k, limits);
    const auto it = colorings.find(k);
    if (it == colorings.end() || it->second.empty()) {
        throw std::runtime_error("no strict " + std::to_string(k) + "-coloring exists");
    }
    if (it->second.size() > 1) {
        std::cerr << "note: " << it->second.size() << " strict " << k
                  << "-colorings; using the lexicographically first\n";
    }
    const mhg::Coloring& witness = it->second.front();
    for (int cls = 0; cls < witness.num_colors; ++cls) {
        const mhg::PairGraph g = mhg::pair_graph(h, witness, cls);
        std::cout << "class " << cls << " size " << g.nodes.size() << " components "
                  << g.component_count() << "\n";
    }
    return kExitOk;
}

int run_min_search(int vertices, const mhg::SpecSet& s, const std::string& kind_name,
                   const mhg::EnumerationLimits& limits) {
    const mhg::EdgeKind kind = parse_kind(kind_name);
    const std::optional<int> best = mhg::exhaustive_min_search(vertices, s, kind, limits);
    if (best) {
        std::cout << "min_" << kind_name << ' ' << *best << "\n";
    } else {
        std::cout << "none\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed hypergraph coloring toolkit"};
    app.require_subcommand(1);

    mhg::EnumerationLimits limits;
    app.add_option("--jobs", limits.jobs, "solver worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--budget", limits.max_nodes, "enumeration node budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::vector<int> set_values;
    std::string variant_name, out_path, in_path, minimality_kind, kind_name;
    std::optional<int> max_colors;
    int vertices = 0;

    CLI::App* gen = app.add_subcommand("gen", "generate a construction and write MHG");
    gen->add_option("--set", set_values, "target set, e.g. 7,5,3")
        ->required()
        ->delimiter(',');
    gen->add_option("--variant", variant_name, "full, full-g, d-min or c-min")->required();
    gen->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App* bounds = app.add_subcommand("bounds", "print extremal bounds for a set");
    bounds->add_option("--set", set_values, "target set")->required()->delimiter(',');

    CLI::App* spectrum = app.add_subcommand("spectrum", "chromatic spectrum of an MHG file");
    spectrum->add_option("path", in_path, "MHG file")->required();
    spectrum->add_option("--max-colors", max_colors, "enumerate up to this many colors");

    CLI::App* verify = app.add_subcommand("verify", "check the one-realization property");
    verify->add_option("path", in_path, "MHG file")->required();
    verify->add_option("--set", set_values, "target set")->required()->delimiter(',');
    verify->add_option("--minimality", minimality_kind,
                       "also require single-deletion minimality for C or D edges");

    CLI::App* pair_graphs =
        app.add_subcommand("pair-graphs", "pair-graph components under the ns-coloring");
    pair_graphs->add_option("path", in_path, "MHG file")->required();
    pair_graphs->add_option("--set", set_values, "target set")->required()->delimiter(',');

    CLI::App* min_search =
        app.add_subcommand("min-search", "exhaustive minimum over tiny vertex counts");
    min_search->add_option("--vertices", vertices, "vertex count (at most 4)")->required();
    min_search->add_option("--set", set_values, "target set")->required()->delimiter(',');
    min_search->add_option("--kind", kind_name, "C or D")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (gen->parsed()) {
            return run_gen(mhg::SpecSet(set_values), variant_name, out_path);
        }
        if (bounds->parsed()) {
            return run_bounds(mhg::SpecSet(set_values));
        }
        if (spectrum->parsed()) {
            return run_spectrum(in_path, max_colors, limits);
        }
        if (verify->parsed()) {
            return run_verify(in_path, mhg::SpecSet(set_values), minimality_kind, limits);
        }
        if (pair_graphs->parsed()) {
            return run_pair_graphs(in_path, mhg::SpecSet(set_values), limits);
        }
        if (min_search->parsed()) {
            return run_min_search(vertices, mhg::SpecSet(set_values), kind_name, limits);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
