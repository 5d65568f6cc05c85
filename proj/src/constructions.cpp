#include "mhg/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mhg {

namespace {

void construction_check(bool ok, const std::string& message) {
    if (!ok) throw std::logic_error("construction: " + message);
}

Vertex diagonal(int s, int i) { return Vertex(std::vector<int>(static_cast<std::size_t>(s), i)); }

// (j,...,j, n_t, n_{t+1}, ..., n_s) with t-1 leading copies of j.
Vertex first_pattern(const SpecSet& s, int t, int j) {
    std::vector<int> coords(static_cast<std::size_t>(t - 1), j);
    for (int i = t; i <= s.size(); ++i) coords.push_back(s.value(i));
    return Vertex(std::move(coords));
}

// (j,...,j, 1, ..., 1) with t-1 leading copies of j.
Vertex second_pattern(const SpecSet& s, int t, int j) {
    std::vector<int> coords(static_cast<std::size_t>(t - 1), j);
    coords.resize(static_cast<std::size_t>(s.size()), 1);
    return Vertex(std::move(coords));
}

Vertex special_vertex(const SpecSet& s) { return Vertex(s.values()); }

// The t whose index range [n_t, n_{t-1}-1] contains j.
int family_of(const SpecSet& s, int j) {
    for (int t = 2; t <= s.size(); ++t) {
        if (s.value(t) <= j && j <= s.value(t - 1) - 1) return t;
    }
    throw std::logic_error("construction: no family contains index " + std::to_string(j));
}

std::map<Vertex, int> index_map(const std::vector<Vertex>& vertices) {
    std::map<Vertex, int> out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        out.emplace(vertices[i], static_cast<int>(i));
    }
    return out;
}

int require_index(const std::map<Vertex, int>& index, const Vertex& v) {
    auto it = index.find(v);
    construction_check(it != index.end(), "vertex " + v.to_string() + " absent");
    return it->second;
}

Edge sorted_edge(std::initializer_list<int> indices) {
    Edge e(indices);
    std::sort(e.begin(), e.end());
    return e;
}

// Keep-list dropping one labelled vertex.
std::vector<int> keep_without(const std::vector<Vertex>& vertices, const Vertex& dropped) {
    std::vector<int> keep;
    bool found = false;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == dropped) {
            found = true;
        } else {
            keep.push_back(static_cast<int>(i));
        }
    }
    construction_check(found, "vertex " + dropped.to_string() + " absent");
    return keep;
}

// Spec with the second-smallest value removed (the reduced spec of the
// CMin branches for ns+1 in S).
SpecSet reduced_spec(const SpecSet& s) {
    std::vector<int> values = s.values();
    values.erase(values.end() - 2);
    return SpecSet(std::move(values));
}

// H-star-1: the sparse-C hypergraph over the reduced spec with the last
// chain-closing C-edge removed.
MixedHypergraph build_h_star1(const SpecSet& s) {
    const SpecSet r = reduced_spec(s);
    const int sr = r.size();
    const int ns = r.smallest();
    std::vector<Vertex> vertices = vertex_set(r);
    EdgeSet c = c_star_edges(r);
    const auto index = index_map(vertices);
    const Edge e2 = sorted_edge({require_index(index, diagonal(sr, ns)),
                                 require_index(index, second_pattern(r, sr, ns)),
                                 require_index(index, diagonal(sr, 1))});
    construction_check(c.erase(e2) == 1, "expected C-edge missing from sparse family");
    return MixedHypergraph(std::move(vertices), std::move(c), full_d_edges(r));
}

// The extra strict coloring of the reduced-spec CMin branches: diagonals
// keep their own colors, the (..,1) tail of the last chain becomes a new
// class, every other (..,1) vertex joins class 1 and everything ending in
// ns joins class ns.
Coloring reduced_extra_coloring(const SpecSet& r, const std::vector<Vertex>& vertices) {
    const int m = r.smallest();
    std::vector<int> labels;
    labels.reserve(vertices.size());
    for (const Vertex& v : vertices) {
        const auto& c = v.coords;
        const bool head_equal =
            std::all_of(c.begin(), c.end() - 1, [&](int x) { return x == c.front(); });
        if (head_equal && c.back() == c.front() && c.front() <= m) {
            labels.push_back(c.front());
        } else if (head_equal && c.back() == 1 && c.front() >= 2) {
            labels.push_back(m + 1);
        } else if (c.back() == 1) {
            labels.push_back(1);
        } else {
            labels.push_back(m);
        }
    }
    return normalize_coloring(labels);
}

std::vector<Coloring> projections(const SpecSet& s, const std::vector<Vertex>& vertices) {
    std::vector<Coloring> out;
    out.reserve(static_cast<std::size_t>(s.size()));
    for (int i = 1; i <= s.size(); ++i) {
        out.push_back(canonical_coloring(s, vertices, i));
    }
    return out;
}

}  // namespace

std::string to_string(Variant v) {
    switch (v) {
        case Variant::Full: return "full";
        case Variant::FullG: return "full-g";
        case Variant::DMin: return "d-min";
        case Variant::CMin: return "c-min";
    }
    throw std::logic_error("unknown variant");
}

std::optional<Variant> variant_from_string(std::string_view name) {
    if (name == "full") return Variant::Full;
    if (name == "full-g") return Variant::FullG;
    if (name == "d-min") return Variant::DMin;
    if (name == "c-min") return Variant::CMin;
    return std::nullopt;
}

std::vector<Vertex> vertex_set(const SpecSet& s) {
    const int dim = s.size();
    const int ns = s.smallest();
    std::vector<Vertex> out;
    for (int i = 1; i <= ns - 1; ++i) {
        out.push_back(diagonal(dim, i));
    }
    for (int t = dim; t >= 2; --t) {
        for (int j = s.value(t); j <= s.value(t - 1) - 1; ++j) {
            out.push_back(first_pattern(s, t, j));
            out.push_back(second_pattern(s, t, j));
        }
    }
    out.push_back(special_vertex(s));
    construction_check(static_cast<int>(out.size()) == 2 * s.largest() - ns,
                       "vertex count is not 2*n1-ns");
    return out;
}

EdgeSet full_d_edges(const SpecSet& s) {
    const std::vector<Vertex> vertices = vertex_set(s);
    const int n = static_cast<int>(vertices.size());
    EdgeSet out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            bool all_differ = true;
            for (int i = 0; i < s.size() && all_differ; ++i) {
                all_differ = vertices[static_cast<std::size_t>(a)].coords[static_cast<std::size_t>(i)] !=
                             vertices[static_cast<std::size_t>(b)].coords[static_cast<std::size_t>(i)];
            }
            if (all_differ) out.insert(Edge{a, b});
        }
    }
    return out;
}

EdgeSet full_c_edges(const SpecSet& s) {
    const std::vector<Vertex> vertices = vertex_set(s);
    const int n = static_cast<int>(vertices.size());
    EdgeSet out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = a + 1; c < n; ++c) {
                if (c <= b) continue;
                bool two_per_coord = true;
                for (int i = 0; i < s.size() && two_per_coord; ++i) {
                    const int x = vertices[static_cast<std::size_t>(a)].coords[static_cast<std::size_t>(i)];
                    const int y = vertices[static_cast<std::size_t>(b)].coords[static_cast<std::size_t>(i)];
                    const int z = vertices[static_cast<std::size_t>(c)].coords[static_cast<std::size_t>(i)];
                    const bool some_equal = x == y || x == z || y == z;
                    const bool all_equal = x == y && y == z;
                    two_per_coord = some_equal && !all_equal;
                }
                if (two_per_coord) out.insert(Edge{a, b, c});
            }
        }
    }
    return out;
}

EdgeSet d_star_edges(const SpecSet& s) {
    const std::vector<Vertex> vertices = vertex_set(s);
    const int n = static_cast<int>(vertices.size());
    const int dim = s.size();
    const int ns = s.smallest();
    std::vector<int> diagonals, ending_one, ending_ns;
    for (int i = 0; i < n; ++i) {
        const Vertex& v = vertices[static_cast<std::size_t>(i)];
        if (v == diagonal(dim, v.coords.front()) && v.coords.front() <= ns - 1) {
            diagonals.push_back(i);
        }
        if (v.coords.back() == 1) ending_one.push_back(i);
        if (v.coords.back() == ns) ending_ns.push_back(i);
    }
    EdgeSet out;
    for (std::size_t a = 0; a < diagonals.size(); ++a) {
        for (std::size_t b = a + 1; b < diagonals.size(); ++b) {
            out.insert(sorted_edge({diagonals[a], diagonals[b]}));
        }
    }
    for (int a : diagonals) {
        for (int b : ending_ns) out.insert(sorted_edge({a, b}));
    }
    for (int a : ending_one) {
        for (int b : ending_ns) {
            bool dominated = true;
            for (int i = 0; i + 1 < dim && dominated; ++i) {
                dominated = vertices[static_cast<std::size_t>(a)].coords[static_cast<std::size_t>(i)] <
                            vertices[static_cast<std::size_t>(b)].coords[static_cast<std::size_t>(i)];
            }
            if (dominated) out.insert(sorted_edge({a, b}));
        }
    }
    construction_check(static_cast<int>(out.size()) == s.largest() * (s.largest() - 1) / 2,
                       "sparse D family count is not n1(n1-1)/2");
    return out;
}

EdgeSet c_star_edges(const SpecSet& s) {
    if (s.size() < 2) {
        throw std::invalid_argument("sparse C family requires at least two spec values");
    }
    const std::vector<Vertex> vertices = vertex_set(s);
    const auto index = index_map(vertices);
    EdgeSet out;
    for (int t = 2; t <= s.size(); ++t) {
        const int lo = s.value(t);
        const int hi = s.value(t - 1) - 1;
        for (int j = lo + 1; j <= hi; ++j) {
            out.insert(sorted_edge({require_index(index, first_pattern(s, t, j)),
                                    require_index(index, second_pattern(s, t, j)),
                                    require_index(index, second_pattern(s, t, j - 1))}));
        }
        for (int j = lo; j <= hi; ++j) {
            // at j = hi the tuple coincides with the next family's first
            // pattern (or with the special vertex at t = 2)
            out.insert(sorted_edge({require_index(index, second_pattern(s, t, j)),
                                    require_index(index, first_pattern(s, t, j)),
                                    require_index(index, first_pattern(s, t, j + 1))}));
        }
        out.insert(sorted_edge({require_index(index, first_pattern(s, t, lo)),
                                require_index(index, second_pattern(s, t, lo)),
                                require_index(index, diagonal(s.size(), 1))}));
    }
    construction_check(static_cast<int>(out.size()) == 2 * s.largest() - 2 * s.smallest(),
                       "sparse C family count is not 2*n1-2*ns");
    return out;
}

Coloring canonical_coloring(const SpecSet& s, const std::vector<Vertex>& vertices,
                            int coordinate) {
    if (coordinate < 1 || coordinate > s.size()) {
        throw std::invalid_argument("coordinate index out of range");
    }
    std::vector<int> labels;
    labels.reserve(vertices.size());
    for (const Vertex& v : vertices) {
        if (v.dimension() < coordinate) {
            throw std::invalid_argument("vertex dimension below coordinate index");
        }
        labels.push_back(v.coords[static_cast<std::size_t>(coordinate - 1)]);
    }
    return normalize_coloring(labels);
}

MixedHypergraph derived_subhypergraph(const MixedHypergraph& h, const std::vector<int>& keep) {
    std::vector<int> sorted_keep = keep;
    std::sort(sorted_keep.begin(), sorted_keep.end());
    if (std::adjacent_find(sorted_keep.begin(), sorted_keep.end()) != sorted_keep.end()) {
        throw std::invalid_argument("derived sub-hypergraph: repeated vertex index");
    }
    if (!sorted_keep.empty() &&
        (sorted_keep.front() < 0 || sorted_keep.back() >= h.num_vertices())) {
        throw std::invalid_argument("derived sub-hypergraph: vertex index out of range");
    }
    std::vector<int> remap(static_cast<std::size_t>(h.num_vertices()), -1);
    for (std::size_t i = 0; i < sorted_keep.size(); ++i) {
        remap[static_cast<std::size_t>(sorted_keep[i])] = static_cast<int>(i);
    }
    auto restrict_family = [&](const EdgeSet& family) {
        EdgeSet out;
        for (const Edge& e : family) {
            Edge mapped;
            mapped.reserve(e.size());
            for (int v : e) {
                if (remap[static_cast<std::size_t>(v)] < 0) break;
                mapped.push_back(remap[static_cast<std::size_t>(v)]);
            }
            if (mapped.size() == e.size()) out.insert(std::move(mapped));
        }
        return out;
    };
    EdgeSet c = restrict_family(h.c_edges());
    EdgeSet d = restrict_family(h.d_edges());
    if (h.labelled()) {
        std::vector<Vertex> labels;
        labels.reserve(sorted_keep.size());
        for (int v : sorted_keep) labels.push_back(h.labels()[static_cast<std::size_t>(v)]);
        return MixedHypergraph(std::move(labels), std::move(c), std::move(d));
    }
    return MixedHypergraph(static_cast<int>(sorted_keep.size()), std::move(c), std::move(d));
}

MixedHypergraph build(const SpecSet& s, Variant v) {
    const int dim = s.size();
    const bool near_top = s.contains(s.largest() - 1);
    const bool near_bottom = s.contains(s.smallest() + 1);
    switch (v) {
        case Variant::Full: {
            return MixedHypergraph(vertex_set(s), full_c_edges(s), full_d_edges(s));
        }
        case Variant::FullG: {
            if (!near_top) {
                throw std::invalid_argument("variant full-g requires n1-1 in S");
            }
            MixedHypergraph full(vertex_set(s), full_c_edges(s), full_d_edges(s));
            return derived_subhypergraph(
                full, keep_without(full.labels(), second_pattern(s, 2, s.value(2))));
        }
        case Variant::DMin: {
            MixedHypergraph h(vertex_set(s), full_c_edges(s), d_star_edges(s));
            if (near_top) {
                h = derived_subhypergraph(
                    h, keep_without(h.labels(), second_pattern(s, 2, s.value(2))));
            }
            construction_check(static_cast<int>(h.d_edges().size()) == delta_d(s),
                               "DMin D-edge count differs from delta_d");
            return h;
        }
        case Variant::CMin: {
            MixedHypergraph h;
            if (dim == 1) {
                h = MixedHypergraph(vertex_set(s), EdgeSet{}, full_d_edges(s));
            } else if (!near_top && !near_bottom) {
                h = MixedHypergraph(vertex_set(s), c_star_edges(s), full_d_edges(s));
            } else if (near_top && !near_bottom) {
                h = MixedHypergraph(vertex_set(s), c_star_edges(s), full_d_edges(s));
                h = derived_subhypergraph(
                    h, keep_without(h.labels(), second_pattern(s, 2, s.value(2))));
                const auto index = index_map(h.labels());
                const int j = s.value(2) - 1;
                const int t = family_of(s, j);
                Edge e1 = sorted_edge({require_index(index, second_pattern(s, t, j)),
                                       require_index(index, first_pattern(s, t, j)),
                                       require_index(index, special_vertex(s))});
                construction_check(h.c_edges().count(e1) == 0, "closing C-edge already present");
                h = h.with_c_edge(std::move(e1));
            } else if (!near_top && near_bottom) {
                h = build_h_star1(s);
            } else if (dim == 2) {
                // S = {m+1, m}: the sparse D construction already has zero
                // C-edges after restriction
                return build(s, Variant::DMin);
            } else {
                h = build_h_star1(s);
                const SpecSet r = reduced_spec(s);
                h = derived_subhypergraph(
                    h, keep_without(h.labels(), second_pattern(r, 2, s.value(2))));
                const auto index = index_map(h.labels());
                const int j = s.value(2) - 1;
                const int t = family_of(r, j);
                Edge e3 = sorted_edge({require_index(index, second_pattern(r, t, j)),
                                       require_index(index, first_pattern(r, t, j)),
                                       require_index(index, special_vertex(r))});
                construction_check(h.c_edges().count(e3) == 0, "closing C-edge already present");
                h = h.with_c_edge(std::move(e3));
            }
            construction_check(static_cast<int>(h.c_edges().size()) == delta_c(s),
                               "CMin C-edge count differs from delta_c");
            return h;
        }
    }
    throw std::logic_error("unknown variant");
}

std::vector<Coloring> canonical_strict_colorings(const SpecSet& s, Variant v) {
    const bool near_top = s.contains(s.largest() - 1);
    const bool near_bottom = s.contains(s.smallest() + 1);
    if (v == Variant::FullG && !near_top) {
        throw std::invalid_argument("variant full-g requires n1-1 in S");
    }
    const bool reduced_branch =
        v == Variant::CMin && s.size() >= 3 && near_bottom;
    if (!reduced_branch) {
        std::vector<Vertex> vertices = vertex_set(s);
        const bool restricted =
            near_top && (v == Variant::FullG || v == Variant::DMin || v == Variant::CMin);
        if (restricted) {
            std::vector<Vertex> kept;
            const Vertex dropped = second_pattern(s, 2, s.value(2));
            for (Vertex& x : vertices) {
                if (x != dropped) kept.push_back(std::move(x));
            }
            vertices = std::move(kept);
        }
        return projections(s, vertices);
    }
    // CMin reduced-spec branches: projections of the reduced spec plus the
    // extra splitting coloring.
    const SpecSet r = reduced_spec(s);
    std::vector<Vertex> vertices = vertex_set(r);
    if (near_top) {
        std::vector<Vertex> kept;
        const Vertex dropped = second_pattern(r, 2, s.value(2));
        for (Vertex& x : vertices) {
            if (x != dropped) kept.push_back(std::move(x));
        }
        vertices = std::move(kept);
    }
    std::vector<Coloring> out = projections(r, vertices);
    out.push_back(reduced_extra_coloring(r, vertices));
    return out;
}

int delta(const SpecSet& s) {
    return 2 * s.largest() - s.smallest() - (s.contains(s.largest() - 1) ? 1 : 0);
}

int delta_d(const SpecSet& s) {
    return s.largest() * (s.largest() - 1) / 2 - (s.contains(s.largest() - 1) ? 1 : 0);
}

int delta_c(const SpecSet& s) {
    const bool near_top = s.contains(s.largest() - 1);
    const bool near_bottom = s.contains(s.smallest() + 1);
    int out = 2 * s.largest() - 2 * s.smallest();
    if (near_top && near_bottom) return out - 2;
    if (near_top || near_bottom) return out - 1;
    return out;
}

}  // namespace mhg
