#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "discokit/discovery.hpp"
#include "discokit/graph.hpp"
#include "discokit/sources.hpp"

namespace disco::detail {

// Ids of one class block: the seat mover t, one seat p per class member,
// and per seat one row of leaves for every (other class, member) pair.
// IS targets add a companion per leaf, a collector bin adjacent to every
// companion, and exact-capacity parking slots behind the bin; VC targets
// add a seat filler behind t; IS targets add a pinned leaf on t instead.
struct FvsVertexBlock {
    Vertex t = -1;
    Vertex t_extra = -1;  // IS: pinned leaf on t; VC: seat filler; else unused
    std::vector<Vertex> p;
    // q[x-1][j][z-1]: leaf of seat x aimed at member z of class j (1-based).
    std::vector<std::map<int, std::vector<Vertex>>> q;
    std::vector<std::map<int, std::vector<Vertex>>> co;  // IS companions
    Vertex bin = -1;            // IS collector
    std::vector<Vertex> slots;  // IS parking slots behind the bin
};

// Ids of one class-pair block: the seat mover t, one seat p per source edge
// between the two classes, and 2n leaves per seat (first n aimed at the
// lower class, last n at the higher). Extras mirror FvsVertexBlock.
struct FvsEdgeBlock {
    Vertex t = -1;
    Vertex t_extra = -1;
    std::vector<Vertex> p;                // per edge, ascending edge order
    std::vector<std::vector<Vertex>> q;   // q[e][l-1], l in 1..2n
    std::vector<std::vector<Vertex>> co;  // IS companions
    Vertex bin = -1;
    std::vector<Vertex> slots;
};

// Ids of one feed gadget: two hubs s and r with a landing row behind each
// (a behind s, d behind r). VC and DS targets hang a pendant b/c off every
// landing vertex; VC targets route the leaf wiring through four tokened
// anchors (sv/rv for class-block leaves, se/re for pair-block leaves), each
// carrying a pendant; IS targets pin a pendant leaf on each hub instead.
struct FvsConnector {
    Vertex s = -1, r = -1;
    Vertex s_leaf = -1, r_leaf = -1;                      // IS hub pendants
    Vertex sv = -1, se = -1, rv = -1, re = -1;            // VC anchors
    Vertex sv_leaf = -1, se_leaf = -1, rv_leaf = -1, re_leaf = -1;
    std::vector<Vertex> a, b, c, d;  // b and c stay empty for IS targets
};

// Ids of everything the clique builder emits. Edge blocks are keyed by the
// 1-based class pair (i, j) with i < j; connectors by (i, j, l) with l the
// side class (i or j).
struct FvsLayout {
    std::vector<FvsVertexBlock> vblocks;
    std::map<std::pair<int, int>, FvsEdgeBlock> eblocks;
    std::map<std::tuple<int, int, int>, FvsConnector> connectors;
};

// Emits the clique builder graph for `kind` (VC, IS, or DS). Validates the
// source (equal sorted independent classes) and requires at least two
// classes; throws std::invalid_argument for other kinds.
FvsLayout emit_fvs(GraphBuilder& bld, const MCCInstance& inst, Problem kind);

}  // namespace disco::detail
