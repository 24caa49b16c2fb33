#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "discokit/graph.hpp"
#include "discokit/pathdecomp.hpp"

namespace disco {

// Weighted orientation instance: a host graph with a path decomposition, a
// positive weight per edge, and a per-vertex out-weight bound. The decision
// is whether every edge can be directed so that the total weight of the
// edges directed out of any single vertex stays at most r.
struct MMOInstance {
    Graph host;
    PathDecomposition pd;
    std::vector<int> sigma;  // parallel to host.edges(), each >= 1
    int r = 1;               // per-vertex out-weight bound, >= 1

    int n() const { return host.num_vertices(); }
    int m() const { return host.num_edges(); }

    // Sum of all edge weights.
    std::int64_t sigma_total() const;
    // Weight of an edge of the host. Throws std::invalid_argument when the
    // edge is absent.
    int sigma_of(const EdgeId& e) const;

    // Throws std::invalid_argument when the decomposition is invalid for the
    // host, the weight list does not match the edge list, a weight or the
    // bound is nonpositive.
    void validate() const;
};

// One direction choice per host edge, parallel to host.edges().
// flip[i] == false directs edges()[i] from its smaller endpoint towards the
// larger one; flip[i] == true directs it the other way. The weight of an
// edge counts against the vertex it points out of (its tail).
struct Orientation {
    std::vector<bool> flip;
};

// Tail (the charged endpoint) of edge `edge_index` under the orientation.
Vertex tail_of(const MMOInstance& inst, const Orientation& o, int edge_index);
// Head (the endpoint the edge points at) of edge `edge_index`.
Vertex head_of(const MMOInstance& inst, const Orientation& o, int edge_index);

// Total outgoing weight per vertex under the given orientation.
std::vector<std::int64_t> out_weights(const MMOInstance& inst, const Orientation& o);

// True when every vertex's outgoing weight is at most inst.r.
bool orientation_feasible(const MMOInstance& inst, const Orientation& o);

struct MMOSolveResult {
    bool yes = false;
    // On yes: the lexicographically least feasible flip sequence.
    std::optional<Orientation> witness;
    // Orientations tested before the answer was known.
    std::uint64_t explored = 0;
};

struct MMOSolveOptions {
    // Exhaustive enumeration is refused beyond this many edges.
    int cap_edges = 24;
};

// Exact decision by enumerating all 2^m orientations in lexicographic order
// of the flip sequence, stopping at the first feasible one. Throws
// ResourceLimitError when the edge count exceeds opts.cap_edges.
MMOSolveResult solve_mmo(const MMOInstance& inst, const MMOSolveOptions& opts = {});

// Whether two instances agree on vertex count, edge count, total weight, and
// out-weight bound — the compatibility test the batch builders apply to
// their members. On mismatch returns a description naming the first field
// that differs; nullopt when the shapes agree.
std::optional<std::string> shape_mismatch(const MMOInstance& a, const MMOInstance& b);

}  // namespace disco
