#include "mhg/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mhg {

std::string Vertex::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords[i]);
    }
    out += ')';
    return out;
}

MixedHypergraph::MixedHypergraph(int num_vertices, EdgeSet c_edges, EdgeSet d_edges)
    : num_vertices_(num_vertices), c_edges_(std::move(c_edges)), d_edges_(std::move(d_edges)) {
    if (num_vertices_ < 0) {
        throw std::invalid_argument("hypergraph: negative vertex count");
    }
    check_edges();
}

MixedHypergraph::MixedHypergraph(std::vector<Vertex> labels, EdgeSet c_edges, EdgeSet d_edges)
    : num_vertices_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      c_edges_(std::move(c_edges)),
      d_edges_(std::move(d_edges)) {
    for (const Vertex& v : labels_) {
        if (v.coords.empty() || v.coords.size() != labels_.front().coords.size()) {
            throw std::invalid_argument("hypergraph: inconsistent label arity");
        }
    }
    check_edges();
}

void MixedHypergraph::check_edges() {
    auto check_family = [&](EdgeSet& family, const char* what) {
        EdgeSet normalized;
        for (Edge e : family) {
            std::sort(e.begin(), e.end());
            if (e.size() < 2) {
                throw std::invalid_argument(std::string(what) + "-edge with fewer than 2 vertices");
            }
            if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
                throw std::invalid_argument(std::string(what) + "-edge with repeated vertex");
            }
            if (e.front() < 0 || e.back() >= num_vertices_) {
                throw std::invalid_argument(std::string(what) + "-edge index out of range");
            }
            normalized.insert(std::move(e));
        }
        family = std::move(normalized);
    };
    check_family(c_edges_, "C");
    check_family(d_edges_, "D");
}

int MixedHypergraph::index_of(const Vertex& v) const {
    auto it = std::find(labels_.begin(), labels_.end(), v);
    if (it == labels_.end()) return -1;
    return static_cast<int>(it - labels_.begin());
}

MixedHypergraph MixedHypergraph::with_c_edge(Edge e) const {
    MixedHypergraph out = *this;
    std::sort(e.begin(), e.end());
    out.c_edges_.insert(std::move(e));
    out.check_edges();
    return out;
}

MixedHypergraph MixedHypergraph::without_c_edge(const Edge& e) const {
    MixedHypergraph out = *this;
    if (out.c_edges_.erase(e) == 0) {
        throw std::invalid_argument("no such C-edge to remove");
    }
    return out;
}

MixedHypergraph MixedHypergraph::without_d_edge(const Edge& e) const {
    MixedHypergraph out = *this;
    if (out.d_edges_.erase(e) == 0) {
        throw std::invalid_argument("no such D-edge to remove");
    }
    return out;
}

int PairGraph::component_count() const {
    if (nodes.empty()) return 0;
    std::vector<int> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto local = [&](int vertex) {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), vertex);
        return static_cast<int>(it - nodes.begin());
    };
    for (const auto& [a, b] : edges) {
        parent[find(local(a))] = find(local(b));
    }
    int count = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++count;
    }
    return count;
}

}  // namespace mhg
