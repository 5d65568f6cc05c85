#pragma once

#include <optional>
#include <vector>

#include "mhg/hypergraph.hpp"

namespace mhg {

// A coloring viewed as a partition of the vertex set, stored in canonical
// restricted-growth form: vertex 0 has color 0 and every new color is the
// smallest unused one. Two colorings are equal iff they induce the same
// partition.
struct Coloring {
    std::vector<int> assignment;  // vertex index -> color id, restricted growth
    int num_colors = 0;

    std::vector<std::vector<int>> color_classes() const;

    auto operator<=>(const Coloring&) const = default;
};

// Canonical relabelling of an arbitrary total assignment; partition-equal
// inputs map to identical outputs.
Coloring normalize_coloring(const std::vector<int>& raw);

enum class EdgeKind { C, D };

struct EdgeViolation {
    EdgeKind kind;
    Edge edge;

    bool operator==(const EdgeViolation&) const = default;
};

// Proper, or the first violating edge (C-edges scanned before D-edges, each
// family in lexicographic order).
struct ProprietyVerdict {
    std::optional<EdgeViolation> violation;

    bool proper() const { return !violation.has_value(); }
};

// A coloring is proper iff every C-edge has two vertices with a common color
// and every D-edge has two vertices with distinct colors.
ProprietyVerdict is_proper_coloring(const MixedHypergraph& h, const Coloring& c);

}  // namespace mhg
