#include "mhg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace mhg {

namespace {

// Edges grouped by their largest vertex index; an edge is checked exactly
// when its last vertex receives a color.
struct EdgeTables {
    std::vector<std::vector<Edge>> c_by_last;
    std::vector<std::vector<Edge>> d_by_last;
};

EdgeTables make_tables(const MixedHypergraph& h) {
    EdgeTables t;
    t.c_by_last.resize(static_cast<std::size_t>(h.num_vertices()));
    t.d_by_last.resize(static_cast<std::size_t>(h.num_vertices()));
    for (const Edge& e : h.c_edges()) t.c_by_last[static_cast<std::size_t>(e.back())].push_back(e);
    for (const Edge& e : h.d_edges()) t.d_by_last[static_cast<std::size_t>(e.back())].push_back(e);
    return t;
}

struct Search {
    const EdgeTables& tables;
    int n;
    int max_colors;
    std::uint64_t max_nodes;
    std::atomic<std::uint64_t>& nodes;
    std::atomic<bool>& over_budget;

    std::vector<int> color;
    std::vector<Coloring>* out = nullptr;  // full-depth results, lexicographic
    std::vector<std::pair<std::vector<int>, int>>* prefixes = nullptr;
    int prefix_depth = 0;

    Search(const EdgeTables& t, int n, int max_colors, std::uint64_t max_nodes,
           std::atomic<std::uint64_t>& nodes, std::atomic<bool>& over_budget)
        : tables(t),
          n(n),
          max_colors(max_colors),
          max_nodes(max_nodes),
          nodes(nodes),
          over_budget(over_budget),
          color(static_cast<std::size_t>(n), 0) {}

    // Violation is decidable exactly when the last vertex of an edge is
    // colored: a D-edge fails when all colors agree, a C-edge when all are
    // pairwise distinct.
    bool consistent(int v) const {
        for (const Edge& e : tables.d_by_last[static_cast<std::size_t>(v)]) {
            const int first = color[static_cast<std::size_t>(e.front())];
            bool all_same = true;
            for (std::size_t i = 1; i < e.size(); ++i) {
                if (color[static_cast<std::size_t>(e[i])] != first) {
                    all_same = false;
                    break;
                }
            }
            if (all_same) return false;
        }
        for (const Edge& e : tables.c_by_last[static_cast<std::size_t>(v)]) {
            std::uint64_t seen = 0;
            bool repeat = false;
            for (int u : e) {
                const std::uint64_t bit = std::uint64_t{1} << color[static_cast<std::size_t>(u)];
                if (seen & bit) {
                    repeat = true;
                    break;
                }
                seen |= bit;
            }
            if (!repeat) return false;
        }
        return true;
    }

    void run(int v, int used) {
        if (over_budget.load(std::memory_order_relaxed)) return;
        if (prefixes && v == prefix_depth) {
            prefixes->emplace_back(std::vector<int>(color.begin(), color.begin() + v), used);
            return;
        }
        if (v == n) {
            out->push_back(Coloring{color, used});
            return;
        }
        const int top = used < max_colors ? used : used - 1;
        for (int c = 0; c <= top; ++c) {
            if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > max_nodes) {
                over_budget.store(true, std::memory_order_relaxed);
                return;
            }
            color[static_cast<std::size_t>(v)] = c;
            if (consistent(v)) {
                run(v + 1, std::max(used, c + 1));
                if (over_budget.load(std::memory_order_relaxed)) return;
            }
        }
    }
};

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t nodes)
    : std::runtime_error("enumeration budget exceeded after " + std::to_string(nodes) +
                         " nodes; no partial result returned"),
      nodes_(nodes) {}

std::map<int, std::vector<Coloring>> enumerate_strict_colorings(
    const MixedHypergraph& h, std::optional<int> max_colors, const EnumerationLimits& limits) {
    const int n = h.num_vertices();
    if (n > 64) {
        throw std::invalid_argument("enumeration supports at most 64 vertices");
    }
    const int cap = max_colors.value_or(n);
    if (cap < 0) {
        throw std::invalid_argument("max_colors must be non-negative");
    }
    std::map<int, std::vector<Coloring>> result;
    if (n == 0 || cap == 0) return result;

    const EdgeTables tables = make_tables(h);
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> over_budget{false};
    const int jobs = std::max(1, limits.jobs);

    if (jobs == 1) {
        std::vector<Coloring> found;
        Search search(tables, n, cap, limits.max_nodes, nodes, over_budget);
        search.out = &found;
        search.run(0, 0);
        if (over_budget.load()) throw BudgetExceeded(nodes.load());
        for (Coloring& c : found) {
            result[c.num_colors].push_back(std::move(c));
        }
        return result;
    }

    // Split the search tree at a shallow prefix depth; every task's subtree
    // is enumerated independently and results are concatenated in prefix
    // order, so the output equals the sequential one.
    std::vector<std::pair<std::vector<int>, int>> prefixes;
    int depth = 1;
    for (;; ++depth) {
        prefixes.clear();
        Search search(tables, n, cap, limits.max_nodes, nodes, over_budget);
        search.prefixes = &prefixes;
        search.prefix_depth = std::min(depth, n);
        search.run(0, 0);
        if (over_budget.load()) throw BudgetExceeded(nodes.load());
        if (depth >= n || static_cast<int>(prefixes.size()) >= 4 * jobs) break;
    }
    if (depth >= n) {
        // prefixes are complete assignments
        for (auto& [assignment, used] : prefixes) {
            result[used].push_back(Coloring{std::move(assignment), used});
        }
        return result;
    }

    std::vector<std::vector<Coloring>> task_out(prefixes.size());
    std::atomic<std::size_t> next_task{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t task = next_task.fetch_add(1);
            if (task >= prefixes.size()) return;
            if (over_budget.load(std::memory_order_relaxed)) return;
            Search search(tables, n, cap, limits.max_nodes, nodes, over_budget);
            std::copy(prefixes[task].first.begin(), prefixes[task].first.end(),
                      search.color.begin());
            search.out = &task_out[task];
            search.run(depth, prefixes[task].second);
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (over_budget.load()) throw BudgetExceeded(nodes.load());

    for (std::vector<Coloring>& chunk : task_out) {
        for (Coloring& c : chunk) {
            result[c.num_colors].push_back(std::move(c));
        }
    }
    return result;
}

std::vector<int> ChromaticSpectrum::feasible_set() const {
    std::vector<int> out;
    out.reserve(counts.size());
    for (const auto& [k, r] : counts) out.push_back(k);
    return out;
}

ChromaticSpectrum chromatic_spectrum(const MixedHypergraph& h, const EnumerationLimits& limits) {
    ChromaticSpectrum spectrum;
    for (const auto& [k, colorings] : enumerate_strict_colorings(h, std::nullopt, limits)) {
        spectrum.counts[k] = colorings.size();
    }
    return spectrum;
}

std::vector<int> feasible_set(const MixedHypergraph& h, const EnumerationLimits& limits) {
    return chromatic_spectrum(h, limits).feasible_set();
}

OneRealizationReport is_one_realization(const MixedHypergraph& h, const SpecSet& target,
                                        const EnumerationLimits& limits) {
    OneRealizationReport report{target, false, {}, enumerate_strict_colorings(h, std::nullopt, limits), {}};
    for (const auto& [k, colorings] : report.witnesses) {
        report.spectrum.counts[k] = colorings.size();
    }
    const int max_k = std::max(target.largest(),
                               report.spectrum.counts.empty()
                                   ? 0
                                   : report.spectrum.counts.rbegin()->first);
    for (int k = 1; k <= max_k; ++k) {
        const std::uint64_t expected = target.contains(k) ? 1 : 0;
        const auto it = report.spectrum.counts.find(k);
        const std::uint64_t actual = it == report.spectrum.counts.end() ? 0 : it->second;
        if (expected != actual) {
            report.discrepancies.push_back({k, expected, actual});
        }
    }
    report.verdict = report.discrepancies.empty();
    return report;
}

PairGraph pair_graph(const MixedHypergraph& h, const Coloring& c, int class_index) {
    const ProprietyVerdict verdict = is_proper_coloring(h, c);
    if (!verdict.proper()) {
        throw std::invalid_argument("pair graph requires a proper coloring");
    }
    if (class_index < 0 || class_index >= c.num_colors) {
        throw std::invalid_argument("pair graph: class index out of range");
    }
    PairGraph g;
    for (std::size_t v = 0; v < c.assignment.size(); ++v) {
        if (c.assignment[v] == class_index) g.nodes.push_back(static_cast<int>(v));
    }
    std::vector<int> per_class(static_cast<std::size_t>(c.num_colors));
    for (const Edge& e : h.c_edges()) {
        std::fill(per_class.begin(), per_class.end(), 0);
        std::vector<int> inside;
        for (int v : e) {
            const int cls = c.assignment[static_cast<std::size_t>(v)];
            ++per_class[static_cast<std::size_t>(cls)];
            if (cls == class_index) inside.push_back(v);
        }
        if (inside.size() != 2) continue;
        bool others_small = true;
        for (int cls = 0; cls < c.num_colors; ++cls) {
            if (cls != class_index && per_class[static_cast<std::size_t>(cls)] > 1) {
                others_small = false;
                break;
            }
        }
        if (others_small) g.edges.emplace(inside[0], inside[1]);
    }
    return g;
}

MinimalityReport minimality_check(const MixedHypergraph& h, const SpecSet& target,
                                  EdgeKind kind, const EnumerationLimits& limits) {
    MinimalityReport report;
    const EdgeSet& family = kind == EdgeKind::C ? h.c_edges() : h.d_edges();
    for (const Edge& e : family) {
        const MixedHypergraph reduced =
            kind == EdgeKind::C ? h.without_c_edge(e) : h.without_d_edge(e);
        if (is_one_realization(reduced, target, limits).verdict) {
            report.safe_deletions.push_back(e);
        }
    }
    report.minimal = report.safe_deletions.empty();
    return report;
}

std::optional<int> exhaustive_min_search(int n, const SpecSet& target, EdgeKind kind,
                                         const EnumerationLimits& limits) {
    if (n > 4) {
        throw std::invalid_argument("exhaustive search is capped at 4 vertices");
    }
    if (n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    std::vector<Edge> candidates;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Edge e;
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) e.push_back(v);
        }
        if (e.size() >= 2) candidates.push_back(std::move(e));
    }
    std::vector<std::size_t> c_candidates, d_candidates;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].size() >= 3) c_candidates.push_back(i);
        d_candidates.push_back(i);
    }
    std::optional<int> best;
    const std::size_t bits = c_candidates.size() + d_candidates.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        EdgeSet c, d;
        for (std::size_t i = 0; i < c_candidates.size(); ++i) {
            if (mask >> i & 1) c.insert(candidates[c_candidates[i]]);
        }
        for (std::size_t i = 0; i < d_candidates.size(); ++i) {
            if (mask >> (c_candidates.size() + i) & 1) d.insert(candidates[d_candidates[i]]);
        }
        const int count = static_cast<int>(kind == EdgeKind::C ? c.size() : d.size());
        if (best && count >= *best) continue;
        const MixedHypergraph h(n, std::move(c), std::move(d));
        const ChromaticSpectrum spectrum = chromatic_spectrum(h, limits);
        if (spectrum.feasible_set() != std::vector<int>(target.values().rbegin(),
                                                        target.values().rend())) {
            continue;
        }
        bool all_one = true;
        for (const auto& [k, r] : spectrum.counts) {
            if (r != 1) {
                all_one = false;
                break;
            }
        }
        if (all_one) best = count;
    }
    return best;
}

}  // namespace mhg
