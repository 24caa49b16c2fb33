#include "discokit/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>
#include <stdexcept>

namespace disco {

EdgeId::EdgeId(Vertex a, Vertex b) {
    if (a == b) {
        throw std::invalid_argument("edge endpoints must be distinct: " + std::to_string(a));
    }
    u = std::min(a, b);
    v = std::max(a, b);
}

Vertex EdgeId::other(Vertex w) const {
    if (w == u) return v;
    if (w == v) return u;
    throw std::invalid_argument("vertex " + std::to_string(w) + " is not an endpoint of " +
                                to_string(*this));
}

std::string to_string(const EdgeId& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int n, std::vector<EdgeId> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i < edges_.size(); ++i) {
        const EdgeId& e = edges_[i];
        if (e.u < 0 || e.v >= n_) {
            throw std::invalid_argument("edge " + to_string(e) + " has an endpoint outside 0.." +
                                        std::to_string(n_ - 1));
        }
        if (i > 0 && edges_[i - 1] == e) {
            throw std::invalid_argument("duplicate edge " + to_string(e));
        }
    }
    adj_.assign(static_cast<size_t>(n_), {});
    for (const EdgeId& e : edges_) {
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range 0.." +
                                    std::to_string(n_ - 1));
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return false;
    const auto& nb = adj_[static_cast<size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<int> Graph::edge_index(const EdgeId& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return std::nullopt;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

std::vector<Vertex> Graph::closed_neighbors(Vertex v) const {
    std::vector<Vertex> result = neighbors(v);
    result.insert(std::lower_bound(result.begin(), result.end(), v), v);
    return result;
}

std::vector<EdgeId> Graph::incident_edges(Vertex v) const {
    std::vector<EdgeId> result;
    for (Vertex w : neighbors(v)) result.emplace_back(v, w);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<int> Graph::distances_from(Vertex s) const {
    check_vertex(s);
    std::vector<int> dist(static_cast<size_t>(n_), kUnreachable);
    dist[static_cast<size_t>(s)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : adj_[static_cast<size_t>(x)]) {
            if (dist[static_cast<size_t>(y)] == kUnreachable) {
                dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

int Graph::vertex_distance(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return 0;
    return distances_from(a)[static_cast<size_t>(b)];
}

std::vector<int> Graph::edge_distances_from(const EdgeId& e) const {
    auto start = edge_index(e);
    if (!start) throw std::invalid_argument("edge " + to_string(e) + " not in graph");
    // BFS in the line graph: per-vertex incidence lists give neighbors of an
    // edge as all edges sharing either endpoint.
    std::vector<std::vector<int>> incidence(static_cast<size_t>(n_));
    for (size_t i = 0; i < edges_.size(); ++i) {
        incidence[static_cast<size_t>(edges_[i].u)].push_back(static_cast<int>(i));
        incidence[static_cast<size_t>(edges_[i].v)].push_back(static_cast<int>(i));
    }
    std::vector<int> dist(edges_.size(), kUnreachable);
    dist[static_cast<size_t>(*start)] = 0;
    std::queue<int> q;
    q.push(*start);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (Vertex endpoint : {edges_[static_cast<size_t>(x)].u, edges_[static_cast<size_t>(x)].v}) {
            for (int y : incidence[static_cast<size_t>(endpoint)]) {
                if (dist[static_cast<size_t>(y)] == kUnreachable) {
                    dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                    q.push(y);
                }
            }
        }
    }
    return dist;
}

int Graph::edge_distance(const EdgeId& e, const EdgeId& f) const {
    auto fi = edge_index(f);
    if (!fi) throw std::invalid_argument("edge " + to_string(f) + " not in graph");
    return edge_distances_from(e)[static_cast<size_t>(*fi)];
}

std::vector<Vertex> Graph::vertex_layer(Vertex s, int layer) const {
    if (layer < 0) throw std::invalid_argument("layer index must be nonnegative");
    std::vector<int> dist = distances_from(s);
    std::vector<Vertex> result;
    for (Vertex v = 0; v < n_; ++v) {
        if (dist[static_cast<size_t>(v)] == layer) result.push_back(v);
    }
    return result;
}

std::vector<EdgeId> Graph::edge_layer(const EdgeId& e, int layer) const {
    if (layer < 0) throw std::invalid_argument("layer index must be nonnegative");
    std::vector<int> dist = edge_distances_from(e);
    std::vector<EdgeId> result;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (dist[i] == layer) result.push_back(edges_[i]);
    }
    return result;
}

std::vector<Vertex> Graph::shortest_path(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    std::vector<Vertex> parent(static_cast<size_t>(n_), -1);
    std::vector<int> dist(static_cast<size_t>(n_), kUnreachable);
    dist[static_cast<size_t>(a)] = 0;
    // Layered BFS with each frontier sorted ascending: a vertex is always
    // discovered by its lowest-id predecessor in the previous layer, making
    // every parent (and hence the returned path) deterministic.
    std::vector<Vertex> frontier{a};
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        std::vector<Vertex> next;
        for (Vertex x : frontier) {
            for (Vertex y : adj_[static_cast<size_t>(x)]) {
                if (dist[static_cast<size_t>(y)] == kUnreachable) {
                    dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                    parent[static_cast<size_t>(y)] = x;
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    if (dist[static_cast<size_t>(b)] == kUnreachable) return {};
    std::vector<Vertex> path;
    for (Vertex x = b; x != -1; x = parent[static_cast<size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<EdgeId> Graph::edge_shortest_path(const EdgeId& a, const EdgeId& b) const {
    auto ai = edge_index(a);
    auto bi = edge_index(b);
    if (!ai) throw std::invalid_argument("edge " + to_string(a) + " not in graph");
    if (!bi) throw std::invalid_argument("edge " + to_string(b) + " not in graph");
    std::vector<std::vector<int>> incidence(static_cast<size_t>(n_));
    for (size_t i = 0; i < edges_.size(); ++i) {
        incidence[static_cast<size_t>(edges_[i].u)].push_back(static_cast<int>(i));
        incidence[static_cast<size_t>(edges_[i].v)].push_back(static_cast<int>(i));
    }
    std::vector<int> parent(edges_.size(), -1);
    std::vector<int> dist(edges_.size(), kUnreachable);
    dist[static_cast<size_t>(*ai)] = 0;
    // Layered BFS over the line graph with frontiers sorted by edge index:
    // every edge is discovered by its lowest-index predecessor in the
    // previous layer, making the parents deterministic.
    std::vector<int> frontier{*ai};
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        std::vector<int> next;
        for (int x : frontier) {
            const EdgeId& ex = edges_[static_cast<size_t>(x)];
            std::vector<int> around;
            for (Vertex endpoint : {ex.u, ex.v}) {
                const auto& inc = incidence[static_cast<size_t>(endpoint)];
                around.insert(around.end(), inc.begin(), inc.end());
            }
            std::sort(around.begin(), around.end());
            for (int y : around) {
                if (dist[static_cast<size_t>(y)] == kUnreachable) {
                    dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                    parent[static_cast<size_t>(y)] = x;
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    if (dist[static_cast<size_t>(*bi)] == kUnreachable) return {};
    std::vector<EdgeId> path;
    for (int x = *bi; x != -1; x = parent[static_cast<size_t>(x)]) {
        path.push_back(edges_[static_cast<size_t>(x)]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<Vertex> InducedSubgraph::to_new(Vertex original) const {
    auto it = std::lower_bound(kept.begin(), kept.end(), original);
    if (it != kept.end() && *it == original) return static_cast<Vertex>(it - kept.begin());
    return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> InducedSubgraph::map_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> result;
    result.reserve(kept.size());
    for (size_t i = 0; i < kept.size(); ++i) {
        result.emplace_back(kept[i], static_cast<Vertex>(i));
    }
    return result;
}

InducedSubgraph induce(const Graph& g, std::vector<Vertex> keep) {
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw std::invalid_argument("induced subgraph: duplicate vertex in keep set");
    }
    for (Vertex v : keep) {
        if (v < 0 || v >= g.num_vertices()) {
            throw std::invalid_argument("induced subgraph: vertex " + std::to_string(v) +
                                        " out of range");
        }
    }
    InducedSubgraph result;
    result.kept = std::move(keep);
    std::vector<EdgeId> edges;
    for (const EdgeId& e : g.edges()) {
        auto nu = result.to_new(e.u);
        auto nv = result.to_new(e.v);
        if (nu && nv) edges.emplace_back(*nu, *nv);
    }
    result.graph = Graph(static_cast<int>(result.kept.size()), std::move(edges));
    return result;
}

InducedSubgraph edge_subgraph(const Graph& g, std::vector<EdgeId> keep) {
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw std::invalid_argument("edge subgraph: duplicate edge in keep set");
    }
    std::vector<Vertex> vertices;
    for (const EdgeId& e : keep) {
        if (!g.has_edge(e)) {
            throw std::invalid_argument("edge subgraph: edge " + to_string(e) + " not in graph");
        }
        vertices.push_back(e.u);
        vertices.push_back(e.v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    InducedSubgraph result;
    result.kept = std::move(vertices);
    std::vector<EdgeId> edges;
    edges.reserve(keep.size());
    for (const EdgeId& e : keep) {
        edges.emplace_back(*result.to_new(e.u), *result.to_new(e.v));
    }
    result.graph = Graph(static_cast<int>(result.kept.size()), std::move(edges));
    return result;
}

bool Graph::separates(const std::vector<Vertex>& removed, Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    std::vector<char> blocked(static_cast<size_t>(n_), 0);
    for (Vertex v : removed) {
        check_vertex(v);
        blocked[static_cast<size_t>(v)] = 1;
    }
    if (blocked[static_cast<size_t>(a)] || blocked[static_cast<size_t>(b)]) {
        throw std::invalid_argument("separation endpoints may not be removed");
    }
    if (a == b) return false;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    seen[static_cast<size_t>(a)] = 1;
    std::queue<Vertex> q;
    q.push(a);
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : adj_[static_cast<size_t>(x)]) {
            if (seen[static_cast<size_t>(y)] || blocked[static_cast<size_t>(y)]) continue;
            if (y == b) return false;
            seen[static_cast<size_t>(y)] = 1;
            q.push(y);
        }
    }
    return true;
}

std::vector<Vertex> Graph::component_of(Vertex s) const {
    std::vector<int> dist = distances_from(s);
    std::vector<Vertex> result;
    for (Vertex v = 0; v < n_; ++v) {
        if (dist[static_cast<size_t>(v)] != kUnreachable) result.push_back(v);
    }
    return result;
}

Vertex GraphBuilder::add_vertex(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<Vertex>(names_.size() - 1);
}

void GraphBuilder::add_edge(Vertex a, Vertex b) {
    if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices()) {
        throw std::invalid_argument("edge endpoint not yet created");
    }
    edges_.emplace_back(a, b);
}

bool GraphBuilder::has_edge(Vertex a, Vertex b) const {
    EdgeId e(a, b);
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::vector<Vertex> GraphBuilder::add_path(Vertex a, Vertex b, int count, const std::string& stem) {
    if (count < 1) throw std::invalid_argument("path insertion needs at least one vertex");
    std::vector<Vertex> inner;
    Vertex prev = a;
    for (int i = 1; i <= count; ++i) {
        Vertex w = add_vertex(stem + "." + std::to_string(i));
        add_edge(prev, w);
        inner.push_back(w);
        prev = w;
    }
    add_edge(prev, b);
    return inner;
}

Graph GraphBuilder::build() const {
    return Graph(num_vertices(), edges_);
}

}  // namespace disco
