#ifndef BIPLANAR_GRAPH_HPP
#define BIPLANAR_GRAPH_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bitlabel.hpp"

namespace biplanar {

// Unordered edge, stored with the smaller endpoint first.
struct Edge {
    VertexLabel a, b;

    Edge() = default;
    Edge(const VertexLabel& u, const VertexLabel& v) {
        if (u == v) throw domain_error("self-loop edge at " + u.str());
        if (u < v) { a = u; b = v; } else { a = v; b = u; }
    }

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;

    std::string str() const { return a.str() + " " + b.str(); }
};

// Immutable undirected graph over bit-string labels. Vertices and edges are
// kept sorted, so all iteration orders are canonical.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<VertexLabel> vertices, std::vector<Edge> edges);

    const std::vector<VertexLabel>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const VertexLabel& v) const;
    bool has_edge(const VertexLabel& u, const VertexLabel& v) const;
    int vertex_index(const VertexLabel& v) const; // -1 when absent

    // Neighbor lists in canonical order, aligned with vertices().
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    std::vector<int> degree_sequence() const; // sorted ascending

    bool operator==(const Graph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    std::vector<VertexLabel> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Bijection between label sets; carrier for automorphisms, the prefix/suffix
// swap, and isomorphism witnesses. Domain and codomain may differ.
class VertexMap {
public:
    VertexMap() = default;
    explicit VertexMap(std::map<VertexLabel, VertexLabel> mapping);

    const std::map<VertexLabel, VertexLabel>& mapping() const { return mapping_; }
    VertexLabel operator()(const VertexLabel& v) const;
    bool defined_on(const VertexLabel& v) const { return mapping_.count(v) != 0; }
    std::size_t size() const { return mapping_.size(); }

    static VertexMap identity_on(const std::vector<VertexLabel>& vs);

private:
    std::map<VertexLabel, VertexLabel> mapping_;
};

Graph hypercube(int d);

std::vector<Graph> connected_components(const Graph& g);

Graph apply_vertex_map(const Graph& g, const VertexMap& m);

// Backtracking isomorphism search with degree / refinement pruning. Returns a
// witness g -> h, re-verified edge-by-edge before being returned. Intended
// for graphs up to ~64 vertices; larger inputs are permitted but may be slow.
std::optional<VertexMap> are_isomorphic(const Graph& g, const Graph& h);

// True when m maps V(g) onto V(h) and the image of E(g) is exactly E(h).
bool is_isomorphism_witness(const Graph& g, const Graph& h, const VertexMap& m);

// Graph text format: "graph width=<d>" header, one "lo hi" line per edge,
// lines sorted, '#' comments ignored. Round-trips bit-exactly.
std::string write_graph_text(const Graph& g);
Graph read_graph_text(const std::string& text);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

} // namespace biplanar

#endif
