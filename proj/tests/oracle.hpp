#pragma once

// Test-only oracles, independent of the backtracking enumerator: a naive
// all-partitions spectrum and a brute-force labelled-coloring counter.

#include <cstdint>
#include <map>
#include <vector>

#include "mhg/coloring.hpp"
#include "mhg/hypergraph.hpp"

namespace mhg::testing {

inline std::map<int, std::vector<Coloring>> naive_strict_colorings(const MixedHypergraph& h) {
    std::map<int, std::vector<Coloring>> out;
    const int n = h.num_vertices();
    if (n == 0) return out;
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (v == n) {
            Coloring c{assignment, used};
            if (is_proper_coloring(h, c).proper()) {
                out[used].push_back(std::move(c));
            }
            return;
        }
        for (int color = 0; color <= used; ++color) {
            assignment[static_cast<std::size_t>(v)] = color;
            self(self, v + 1, std::max(used, color + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline std::map<int, std::uint64_t> naive_spectrum(const MixedHypergraph& h) {
    std::map<int, std::uint64_t> out;
    for (const auto& [k, list] : naive_strict_colorings(h)) {
        out[k] = list.size();
    }
    return out;
}

// Number of maps [0..n) -> [0..k) that use every color and satisfy every
// edge constraint; equals r_k * k! when the enumerator is correct.
inline std::uint64_t count_surjective_proper_labelings(const MixedHypergraph& h, int k) {
    const int n = h.num_vertices();
    if (n == 0 || k < 1) return 0;
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    for (;;) {
        std::uint32_t used = 0;
        for (int l : label) used |= 1u << l;
        if (used == (k >= 32 ? ~0u : (1u << k) - 1)) {
            bool ok = true;
            for (const Edge& e : h.d_edges()) {
                bool distinct = false;
                for (std::size_t i = 1; i < e.size() && !distinct; ++i) {
                    distinct = label[static_cast<std::size_t>(e[i])] !=
                               label[static_cast<std::size_t>(e[0])];
                }
                if (!distinct) {
                    ok = false;
                    break;
                }
            }
            for (const Edge& e : h.c_edges()) {
                if (!ok) break;
                bool repeat = false;
                for (std::size_t i = 0; i < e.size() && !repeat; ++i) {
                    for (std::size_t j = i + 1; j < e.size(); ++j) {
                        if (label[static_cast<std::size_t>(e[i])] ==
                            label[static_cast<std::size_t>(e[j])]) {
                            repeat = true;
                            break;
                        }
                    }
                }
                if (!repeat) ok = false;
            }
            if (ok) ++count;
        }
        int pos = n - 1;
        while (pos >= 0 && label[static_cast<std::size_t>(pos)] == k - 1) {
            label[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++label[static_cast<std::size_t>(pos)];
    }
    return count;
}

}  // namespace mhg::testing
