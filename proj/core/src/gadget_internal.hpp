#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "discokit/gadgets.hpp"
#include "discokit/graph.hpp"
#include "discokit/mmo.hpp"

namespace disco::detail {

// Flavor of a member graph: the plain form; the form with every token pair
// and the first r spokes of every hub split once; or the form with token
// pairs split twice, the spare pair and all spokes and pending attachments
// split once, plus midpoint routing from selection vertices to pending
// pairs.
enum class GHFlavor { Plain, SubdividedVC, SubdividedDS };

// Ids for one host-edge component. Vectors are indexed 0..sigma_e-1.
struct EdgeSlot {
    std::vector<Vertex> a, b;         // token pairs
    Vertex a_plus = -1, b_plus = -1;  // spare pair
    Vertex eu = -1, ev = -1;          // selection vertices; eu = smaller host endpoint
    std::vector<Vertex> c;            // split of a[i]-b[i] nearer a (absent when Plain)
    std::vector<Vertex> cp;           // second split nearer b (SubdividedDS only)
    Vertex c_plus = -1;               // split of the spare pair (SubdividedDS only)
};

// Ids for one (host edge, host endpoint) side. Vectors indexed 0..sigma_e-1.
struct SideSlot {
    std::vector<Vertex> y, z;  // pending pairs; z is a leaf of y
    std::vector<Vertex> cy;    // split of w-y[i] (SubdividedDS only)
    std::vector<Vertex> cpy;   // midpoint of the selection-vertex-to-y[i] path (SubdividedDS only)
};

// Ids for one host-vertex component. x is indexed 0..r, so x[r] is the spare
// spoke.
struct VertexSlot {
    Vertex w = -1;
    std::vector<Vertex> x;
    std::vector<Vertex> cx;  // splits of w-x[j]: first r when SubdividedVC, all r+1 when SubdividedDS
};

struct DonorSlot {
    std::array<Vertex, 3> d{-1, -1, -1};        // token carriers
    std::array<Vertex, 4> mid{-1, -1, -1, -1};  // splits between carriers (SubdividedDS only)
};

struct SupplierSlot {
    Vertex s = -1;
    std::vector<DonorSlot> donors;  // r*n - sigma_total of them
    Vertex pendant = -1;
};

struct DominatorSlot {
    Vertex d = -1;
    Vertex dprime = -1;
};

// Ids of everything one member copy contributes.
struct GHLayout {
    GHFlavor flavor = GHFlavor::Plain;
    std::vector<EdgeSlot> edges;                 // per host edge, ascending edge order
    std::vector<std::array<SideSlot, 2>> sides;  // per host edge: [0] = u side, [1] = v side
    std::vector<VertexSlot> verts;               // per host vertex
    std::optional<SupplierSlot> supplier;
    std::optional<DominatorSlot> dominator;

    // Side slot of edge `idx` at host endpoint `end` (must be an endpoint).
    const SideSlot& side_at(const Graph& host, int idx, Vertex end) const;
    // Selection vertex of edge `idx` on the side of host endpoint `end`.
    Vertex selection_at(const Graph& host, int idx, Vertex end) const;
};

struct GHOptions {
    GHFlavor flavor = GHFlavor::Plain;
    // Adds the donor component (its source-to-spoke edges included).
    bool with_supplier = false;
    // Adds the pending-split guard pair (SubdividedDS flavor only).
    bool with_dominator = false;
    // Prepended to every vertex name (copy tag for batch builders).
    std::string prefix;
};

// Emits one member copy into the builder and returns the id layout. Split
// placement, donor styling, and pending-pair routing follow opts.flavor.
GHLayout emit_gh(GraphBuilder& builder, const MMOInstance& mmo, const GHOptions& opts);

// Appends the bag schedule of one member copy to `bags`: donor and guard
// bags first (when present), then a staggered walk of the host
// decomposition. Every appended bag additionally contains `base`. The
// resulting bags have size at most width(mmo.pd) + 7 + |base| (+1 with a
// supplier or dominator present, +2 with both), with slack depending on the
// flavor.
void gh_schedule(std::vector<std::vector<Vertex>>& bags, const MMOInstance& mmo,
                 const GHLayout& layout, const std::vector<Vertex>& base);

// Sorts each bag and drops exact consecutive duplicates.
void finish_bags(std::vector<std::vector<Vertex>>& bags);

// The number of donor chains a supplier carries for this instance.
std::int64_t donor_count(const MMOInstance& mmo);

}  // namespace disco::detail
