#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace disco {

using Vertex = std::int32_t;

// Canonical undirected edge: endpoints stored with the smaller id first.
struct EdgeId {
    Vertex u = 0;
    Vertex v = 0;

    EdgeId() = default;
    EdgeId(Vertex a, Vertex b);

    bool incident_to(Vertex w) const { return u == w || v == w; }
    bool shares_endpoint(const EdgeId& other) const {
        return incident_to(other.u) || incident_to(other.v);
    }
    // The endpoint that is not `w`; `w` must be an endpoint.
    Vertex other(Vertex w) const;

    auto operator<=>(const EdgeId&) const = default;
};

std::string to_string(const EdgeId& e);

// Immutable simple undirected graph over dense vertex ids 0..n-1.
// No self-loops, no parallel edges.
class Graph {
public:
    static constexpr int kUnreachable = -1;

    Graph() = default;
    // Validates endpoints and rejects loops/duplicates.
    Graph(int n, std::vector<EdgeId> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    // Edges in ascending canonical order.
    const std::vector<EdgeId>& edges() const { return edges_; }
    bool has_edge(Vertex a, Vertex b) const;
    bool has_edge(const EdgeId& e) const { return has_edge(e.u, e.v); }
    // Index of an edge in edges(), or nullopt.
    std::optional<int> edge_index(const EdgeId& e) const;

    // Open neighborhood, ascending. Throws std::invalid_argument on bad id.
    const std::vector<Vertex>& neighbors(Vertex v) const;
    // Closed neighborhood N[v] = N(v) ∪ {v}, ascending.
    std::vector<Vertex> closed_neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    // Edges incident to v, ascending.
    std::vector<EdgeId> incident_edges(Vertex v) const;

    // Hop distances (BFS); kUnreachable when disconnected.
    int vertex_distance(Vertex a, Vertex b) const;
    // Distances from s to every vertex.
    std::vector<int> distances_from(Vertex s) const;
    // Line-graph distance between edges, with distance 0 from an edge to
    // itself and 1 between distinct edges sharing an endpoint.
    int edge_distance(const EdgeId& e, const EdgeId& f) const;
    // Line-graph distances from edge e to every edge (indexed like edges()).
    std::vector<int> edge_distances_from(const EdgeId& e) const;

    // All vertices at hop distance exactly `layer` from s, ascending.
    std::vector<Vertex> vertex_layer(Vertex s, int layer) const;
    // All edges at line-graph distance exactly `layer` from e, ascending.
    std::vector<EdgeId> edge_layer(const EdgeId& e, int layer) const;

    // Shortest path a..b inclusive; BFS parents tie-broken to the lowest id,
    // so the result is deterministic. Empty when unreachable.
    std::vector<Vertex> shortest_path(Vertex a, Vertex b) const;
    // Shortest edge sequence a..b inclusive in the line graph (consecutive
    // edges share an endpoint); parents tie-broken to the lowest edge index.
    // Empty when unreachable; {a} when a == b.
    std::vector<EdgeId> edge_shortest_path(const EdgeId& a, const EdgeId& b) const;

    // True when removing `removed` disconnects a from b (a,b not removed).
    bool separates(const std::vector<Vertex>& removed, Vertex a, Vertex b) const;

    // Connected component of s as a sorted vertex list.
    std::vector<Vertex> component_of(Vertex s) const;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<EdgeId> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// A subgraph together with the renumbering that produced it: new ids are
// dense and follow the ascending order of the kept original ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> kept;  // new id -> original id, ascending

    // Kernel id for an original vertex, or nullopt when it was dropped.
    std::optional<Vertex> to_new(Vertex original) const;
    // The kept list as explicit (original, new) pairs, ascending by original.
    std::vector<std::pair<Vertex, Vertex>> map_pairs() const;
};

// Subgraph induced by `keep` (sorted internally; duplicates and bad ids are
// rejected): all edges of g with both endpoints kept survive.
InducedSubgraph induce(const Graph& g, std::vector<Vertex> keep);

// Graph consisting of exactly the given edges of g (duplicates rejected);
// vertices are the endpoints of those edges, renumbered densely.
InducedSubgraph edge_subgraph(const Graph& g, std::vector<EdgeId> keep);

// Incremental construction helper used by gadget builders: vertices get
// dense ids in creation order and carry symbolic names for inspection.
class GraphBuilder {
public:
    Vertex add_vertex(std::string name);
    void add_edge(Vertex a, Vertex b);
    // Splices `count` fresh vertices into edge (a,b): a-w1-...-wk-b.
    // The edge (a,b) must not have been added; names are derived from `stem`.
    // Returns the ids of the inserted vertices in path order.
    std::vector<Vertex> add_path(Vertex a, Vertex b, int count, const std::string& stem);

    int num_vertices() const { return static_cast<int>(names_.size()); }
    bool has_edge(Vertex a, Vertex b) const;
    const std::string& name_of(Vertex v) const { return names_.at(static_cast<size_t>(v)); }

    Graph build() const;
    std::vector<std::string> names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::vector<EdgeId> edges_;
};

}  // namespace disco
