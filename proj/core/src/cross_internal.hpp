// Shared emission layouts for the batch builders over vertex-ordering and
// edge-coloring sources. The emitters are deterministic: calling one twice
// on equal inputs yields identical vertex names, ids, and edges, which lets
// the witness replayers rebuild the layout and verify it matches a given
// construction before scheduling slides.
#pragma once

#include <cstdint>
#include <vector>

#include "discokit/graph.hpp"
#include "discokit/sources.hpp"

namespace disco::detail {

// Grid layout for the ordering batch: one terminal pair, one anchor per
// position, and per member an n-by-n cell grid whose column-x cells hang
// off anchor x through a length-n tail.
struct SpdLayout {
    Vertex a = -1;
    Vertex b = -1;
    std::vector<Vertex> anchors;                         // anchors[x-1]
    std::vector<std::vector<std::vector<Vertex>>> cell;  // cell[member][x-1][y-1]
    // tail[member][x-1][y-1]: the n-1 vertices between that cell and its
    // anchor, in cell-to-anchor order (empty when n == 1).
    std::vector<std::vector<std::vector<std::vector<Vertex>>>> tail;
};

// Emits terminals, anchors, then per member the cells in position-major
// order, each followed by its anchor tail. Preconditions are checked by
// compose_spd before calling.
SpdLayout emit_spd(GraphBuilder& bld, const std::vector<HamPathInstance>& members);

// Per-member piece of the separator batch: entry/exit hubs, one hub pair
// per level, and per level an entry/exit vertex pair for every source edge.
struct VcutMember {
    Vertex s = -1;
    Vertex t = -1;
    std::vector<Vertex> s_level;                 // s_level[p-1], levels 1..kappa-1
    std::vector<Vertex> t_level;                 // t_level[p-1]
    std::vector<std::vector<Vertex>> entry;      // entry[p-1][h]: level-p copy of edge h, entry side
    std::vector<std::vector<Vertex>> exit;       // exit[p-1][h]: level-p copy of edge h, exit side
};

// Global layout for the separator batch after padding the member list to a
// power of two (at least two, so the selection tree has a level below the
// root).
struct VcutLayout {
    Vertex a1 = -1;
    Vertex b1 = -1;
    int log_t = 0;                               // selection-tree depth
    std::int64_t long_len = 0;                   // spacing-path length
    std::vector<std::vector<Vertex>> tree;       // tree[d]: depth-d nodes, left to right;
                                                 // tree[0] = {a1}, tree[log_t] = member entry hubs
    std::vector<Vertex> guards;                  // guards[d-1]: tokened watcher over depth d
    std::vector<std::vector<Vertex>> slack_u;    // slack_u[i-1][j-1]: designated endpoint of
                                                 // group-i edge j, wired to one level side
    std::vector<std::vector<Vertex>> slack_mate; // slack_mate[i-1][j-1]: its tokened partner
    std::vector<VcutMember> members;             // one per padded member
};

// Emits the padded separator batch: terminals, guards, member gadgets with
// their internal spacing paths, the selection tree, and the slack groups.
// Preconditions are checked by compose_vcutd before calling.
VcutLayout emit_vcutd(GraphBuilder& bld, const std::vector<RainbowInstance>& members);

}  // namespace disco::detail
