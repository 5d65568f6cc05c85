#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mhg {

// Coordinate tuple attached to a vertex of a generated instance.
struct Vertex {
    std::vector<int> coords;

    Vertex() = default;
    explicit Vertex(std::vector<int> c) : coords(std::move(c)) {}

    int dimension() const { return static_cast<int>(coords.size()); }
    std::string to_string() const;  // "(1,2,3)"

    auto operator<=>(const Vertex&) const = default;
};

// An edge is a sorted list of distinct vertex indices; families are kept as
// ordered sets so duplicates merge and iteration order is lexicographic.
using Edge = std::vector<int>;
using EdgeSet = std::set<Edge>;

// A mixed hypergraph: N vertices (optionally labelled with coordinate
// tuples), a family of C-edges and a family of D-edges. Edges reference
// vertex indices, so hand-made instances need no coordinate labels.
class MixedHypergraph {
public:
    MixedHypergraph() = default;
    MixedHypergraph(int num_vertices, EdgeSet c_edges, EdgeSet d_edges);
    MixedHypergraph(std::vector<Vertex> labels, EdgeSet c_edges, EdgeSet d_edges);

    int num_vertices() const { return num_vertices_; }
    bool labelled() const { return !labels_.empty(); }
    const std::vector<Vertex>& labels() const { return labels_; }
    const EdgeSet& c_edges() const { return c_edges_; }
    const EdgeSet& d_edges() const { return d_edges_; }

    // Index of a labelled vertex, -1 if absent.
    int index_of(const Vertex& v) const;

    MixedHypergraph with_c_edge(Edge e) const;
    MixedHypergraph without_c_edge(const Edge& e) const;
    MixedHypergraph without_d_edge(const Edge& e) const;

    bool operator==(const MixedHypergraph&) const = default;

private:
    void check_edges();

    int num_vertices_ = 0;
    std::vector<Vertex> labels_;  // empty, or one tuple per vertex
    EdgeSet c_edges_;
    EdgeSet d_edges_;
};

// Pair graph of one color class: nodes are the class members, an edge joins
// x,y when some C-edge meets the class exactly in {x,y} and every other
// class in at most one vertex.
struct PairGraph {
    std::vector<int> nodes;
    std::set<std::pair<int, int>> edges;  // pairs (a,b) with a < b

    int component_count() const;
};

}  // namespace mhg
