#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "discokit/discovery.hpp"
#include "discokit/mmo.hpp"
#include "gadget_internal.hpp"

namespace disco::detail {

// Ids of the selection component.
struct SelectorIds {
    std::vector<Vertex> sel, unsel;  // pick/keep pair per member
    Vertex h = -1, q = -1;           // weights hub, orientations quay
    std::vector<Vertex> f, g, o, p;  // refill pairs behind the hubs
    std::vector<Vertex> h_pend, q_pend;
};

// Emits the selection component: pick/keep pairs, refill pairs behind the
// hubs, and `pendants` leaves on each hub.
SelectorIds emit_selector(GraphBuilder& bld, int t, int m, std::int64_t sigma_total,
                          std::int64_t pendants);

// Emits the single-copy member graph of the reduction builder for `kind`:
// plain for IS, once-split with a donor component for VC, twice-split with
// a donor component and a guard pair for DS. Validates the instance and the
// donor precondition.
GHLayout emit_reduction(GraphBuilder& bld, const MMOInstance& mmo, Problem kind);

// Ids of everything a batch builder emits.
struct BatchParts {
    std::vector<GHLayout> copies;
    SelectorIds selector;
    // Midpoint of the picker-to-target path, per copy (DS batches only).
    std::vector<std::map<Vertex, Vertex>> mid_of;
};

// Emits all member copies (prefixes "m1.", "m2.", ...), the selection
// component, and the cross wiring of the batch builder for `kind`.
// Validates the members (nonempty, shape-compatible, at least one edge).
BatchParts emit_batch(GraphBuilder& bld, const std::vector<MMOInstance>& members, Problem kind);

}  // namespace disco::detail
