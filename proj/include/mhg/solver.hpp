#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mhg/coloring.hpp"
#include "mhg/hypergraph.hpp"
#include "mhg/spec_set.hpp"

namespace mhg {

struct EnumerationLimits {
    // Hard cap on search nodes (assignment attempts); exceeding it throws
    // BudgetExceeded rather than returning a truncated result.
    std::uint64_t max_nodes = 500'000'000;
    // Worker threads; results are identical for every value.
    int jobs = 1;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t nodes);
    std::uint64_t nodes_visited() const { return nodes_; }

private:
    std::uint64_t nodes_;
};

// Complete list of partition-distinct strict k-colorings for each
// k <= max_colors (default: the vertex count), in lexicographic order of
// the restricted-growth strings. Backtracks over restricted-growth
// assignments in vertex order; a D-edge prunes as soon as all its vertices
// share one color, a C-edge as soon as all its vertices are pairwise
// distinct.
std::map<int, std::vector<Coloring>> enumerate_strict_colorings(
    const MixedHypergraph& h, std::optional<int> max_colors = std::nullopt,
    const EnumerationLimits& limits = {});

struct ChromaticSpectrum {
    std::map<int, std::uint64_t> counts;  // k -> r_k, only k with r_k > 0

    std::vector<int> feasible_set() const;

    bool operator==(const ChromaticSpectrum&) const = default;
};

ChromaticSpectrum chromatic_spectrum(const MixedHypergraph& h,
                                     const EnumerationLimits& limits = {});
std::vector<int> feasible_set(const MixedHypergraph& h,
                              const EnumerationLimits& limits = {});

struct OneRealizationReport {
    SpecSet target;
    bool verdict = false;  // feasible set equals target and every r_k = 1
    ChromaticSpectrum spectrum;
    // For each feasible k, the full list of witness partitions.
    std::map<int, std::vector<Coloring>> witnesses;

    struct Discrepancy {
        int k;
        std::uint64_t expected;
        std::uint64_t actual;

        bool operator==(const Discrepancy&) const = default;
    };
    std::vector<Discrepancy> discrepancies;  // ascending by k
};

OneRealizationReport is_one_realization(const MixedHypergraph& h, const SpecSet& target,
                                        const EnumerationLimits& limits = {});

// Pair graph of color class `class_index` under the proper strict coloring c.
PairGraph pair_graph(const MixedHypergraph& h, const Coloring& c, int class_index);

struct MinimalityReport {
    bool minimal = false;             // no single deletion keeps the property
    std::vector<Edge> safe_deletions;  // deletions that keep it (expected empty)
};

// Deletes each edge of the given kind in turn and re-checks one-realization.
MinimalityReport minimality_check(const MixedHypergraph& h, const SpecSet& target,
                                  EdgeKind kind, const EnumerationLimits& limits = {});

// Exact minimum edge count of the given kind over ALL mixed hypergraphs on
// n labelled vertices that one-realize `target` (C candidates: subsets of
// size >= 3, D candidates: size >= 2). Brute force; refuses n > 4.
// nullopt when no such hypergraph exists.
std::optional<int> exhaustive_min_search(int n, const SpecSet& target, EdgeKind kind,
                                         const EnumerationLimits& limits = {});

}  // namespace mhg
