#include "mhg/coloring.hpp"

#include <map>
#include <stdexcept>

namespace mhg {

std::vector<std::vector<int>> Coloring::color_classes() const {
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(num_colors));
    for (std::size_t v = 0; v < assignment.size(); ++v) {
        classes[static_cast<std::size_t>(assignment[v])].push_back(static_cast<int>(v));
    }
    return classes;
}

Coloring normalize_coloring(const std::vector<int>& raw) {
    Coloring out;
    out.assignment.reserve(raw.size());
    std::map<int, int> relabel;
    for (int label : raw) {
        auto [it, inserted] = relabel.emplace(label, static_cast<int>(relabel.size()));
        out.assignment.push_back(it->second);
    }
    out.num_colors = static_cast<int>(relabel.size());
    return out;
}

ProprietyVerdict is_proper_coloring(const MixedHypergraph& h, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != h.num_vertices()) {
        throw std::invalid_argument("coloring does not assign every vertex");
    }
    for (const Edge& e : h.c_edges()) {
        bool repeat = false;
        for (std::size_t i = 0; i < e.size() && !repeat; ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                if (c.assignment[static_cast<std::size_t>(e[i])] ==
                    c.assignment[static_cast<std::size_t>(e[j])]) {
                    repeat = true;
                    break;
                }
            }
        }
        if (!repeat) {
            return ProprietyVerdict{EdgeViolation{EdgeKind::C, e}};
        }
    }
    for (const Edge& e : h.d_edges()) {
        bool distinct = false;
        for (std::size_t i = 1; i < e.size(); ++i) {
            if (c.assignment[static_cast<std::size_t>(e[i])] !=
                c.assignment[static_cast<std::size_t>(e[0])]) {
                distinct = true;
                break;
            }
        }
        if (!distinct) {
            return ProprietyVerdict{EdgeViolation{EdgeKind::D, e}};
        }
    }
    return ProprietyVerdict{};
}

}  // namespace mhg
