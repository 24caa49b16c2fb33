#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discokit/discovery.hpp"
#include "discokit/graph.hpp"

namespace disco {

// Size/budget audit attached to every kernel. bound_satisfied is recomputed
// from the kernel that was actually built, never assumed from the rule.
struct KernelAudit {
    int vertex_count = 0;
    int edge_count = 0;
    std::int64_t budget = 0;
    std::string bound_claimed;     // human-readable bound, empty when none applies
    bool bound_satisfied = true;   // recomputed; meaningful only when audited
    bool bound_audited = false;    // false when no bound was claimed or checkable
    // Per-(token, layer) set sizes after trimming, for rules that trim
    // distance layers: entries are (token index in start order, layer, size).
    std::vector<std::array<int, 3>> layer_sizes;
};

// Output contract of every reduction: the reduced instance, the partial
// original-id -> kernel-id vertex relabeling, and the recomputed audit.
struct KernelReport {
    DiscoveryInstance kernel;
    std::vector<std::pair<Vertex, Vertex>> vertex_map;  // ascending by original id
    KernelAudit audit;
    bool rejected = false;  // a reduction rule decided "no" outright
    std::string note;

    // Kernel id of an original vertex, or nullopt when it was dropped.
    std::optional<Vertex> map_of(Vertex original) const;
};

// Family of sets whose pairwise intersections all equal the core; the petals
// are the member sets themselves and each petal minus the core is nonempty.
struct Sunflower {
    std::vector<int> core;                 // sorted ascending
    std::vector<std::vector<int>> petals;  // each sorted; drawn from the searched family
};

// Searches a duplicate-free family of sets (each of size <= d) for a
// sunflower with exactly p petals. The search enumerates every feasible core
// (the empty set and all pairwise intersections) with an exact packing over
// the petal candidates, so it succeeds whenever any p-petal sunflower
// exists — in particular always when |family| > d!·(p−1)^d. Deterministic:
// cores are tried in ascending lexicographic order and the petal choice is
// the first found by ascending-index depth-first packing.
// Throws std::invalid_argument when d < 1 or p < 1, or when a family member
// exceeds size d or appears twice.
std::optional<Sunflower> find_sunflower(const std::vector<std::vector<int>>& family, int d, int p);

// Vertex-cover token instances: delete vertices of degree > k; reject when
// the remainder has > k² edges, > 2k² non-isolated vertices, or when more
// than k vertices had degree > k (any vertex cover of size k must contain
// all of them). Otherwise keep the non-isolated remainder, the token
// vertices, the high-degree vertices, one lowest-id representative per
// high-degree pair whose common neighborhood survives only as isolated
// remainder vertices, and pad each high-degree vertex back to degree k+1
// from its lowest-id unused neighbors. Rejection yields the canonical
// no-instance (a single edge, no tokens, budget 0) with rejected = true.
// The audit asserts vertex count <= 3k²+2k.
// Throws std::invalid_argument unless inst is a VC instance with |start| = k.
KernelReport kernelize_vcd(const DiscoveryInstance& inst, int k);

// Matching token instances: within each token-bearing component (token-free
// components are dropped), trim every set E(s,i) of edges at line-graph
// distance exactly i in [3k] from a token edge s down to <= 8k² by repeatedly
// removing the lowest petal edge of a (2k+1)-petal sunflower over edge
// endpoint sets; the kernel keeps the trimmed sets, the token edges, and the
// lowest-index shortest edge paths connecting each kept edge to its token.
// The audit asserts edge count <= k + 9k³·8k² and records trimmed layer sizes.
// Throws std::invalid_argument unless inst is a MAT instance with |start| = k.
KernelReport kernelize_matd(const DiscoveryInstance& inst, int k);

// Independent-set token instances: restrict the graph to vertices within
// distance 3k of some token, plus the tokens. Equivalent on every graph.
// Throws std::invalid_argument unless inst is an IS instance.
KernelReport isd_distance_truncate(const DiscoveryInstance& inst, int k);

// One irrelevant-vertex deletion for independent-set token instances: among
// non-token vertices at distance exactly `layer` from token vertex s whose
// closed neighborhoods contain a (k+1)-petal sunflower (k = token count),
// deletes the lowest-id petal vertex that is further than 3k from every
// other token. The sunflower argument makes the vertex avoidable for the
// token at s; the distance guard makes it unneeded by every other token, so
// the deletion preserves the answer outright. Returns nullopt when no such
// deletion applies.
struct PetalRemoval {
    DiscoveryInstance instance;  // one vertex smaller, ids renumbered
    Vertex removed;              // id of the deleted vertex in the input instance
    std::vector<std::pair<Vertex, Vertex>> vertex_map;  // input id -> output id
};
std::optional<PetalRemoval> isd_remove_petal(const DiscoveryInstance& inst, Vertex s, int layer);

// Exhaustive search for a deletion set X (|X| <= x_cap, over all vertices,
// subsets tried in ascending size then lexicographic order) such that the
// greedy ascending scan of a_set ∖ X collects at least m vertices that are
// pairwise at distance > r in g − X. Returns the first hit.
// Throws ResourceLimitError when more than `budget` candidate sets X would
// be examined, std::invalid_argument when r < 1 or x_cap < 0.
struct QuasiWideWitness {
    std::vector<Vertex> x;  // deleted vertices, sorted
    std::vector<Vertex> b;  // r-independent in g − x, sorted, |b| >= m
};
std::optional<QuasiWideWitness> quasi_wide_witness(const Graph& g,
                                                   const std::vector<Vertex>& a_set, int r, int m,
                                                   int x_cap, std::uint64_t budget = 5'000'000);

// Caps and (optional) class constants for the independent-set kernel. The
// per-layer target size n2 and the deletion-set bound x2 depend on the graph
// class and are supplied by the caller when known; equivalence never depends
// on them, only the size audit does.
struct IsdKernelOptions {
    int x_cap = 2;                              // largest |X| tried per witness search
    std::uint64_t witness_budget = 200'000;     // X-candidates per witness search
    std::uint64_t removal_cap = 100'000;        // total set-removals across all layers
    std::optional<std::int64_t> n2;             // target bound N₂(2^{x₂}·(k+1))
    std::optional<int> x2;                      // deletion-set size constant
};

// Independent-set token instances: distance-truncate, then shrink each set
// V(s,i) of non-token vertices at distance exactly i in [3k] from token s by
// repeatedly finding a quasi-wideness witness (X, B) over the set, splitting
// B into classes with equal closed neighborhood inside X (each class of
// size >= k+1 is a sunflower with core inside X), and dropping the lowest-id
// vertex over all classes of size >= k+1 from the set; the kernel keeps the trimmed
// sets, the tokens, and the lowest-id shortest paths from each kept vertex
// to its token. Every drop is justified per-token, so equivalence holds
// unconditionally; the size bound k + 9k³·n2 is audited only when n2 and x2
// are supplied. When a cap interrupts the search the report is flagged
// "rules saturated, size bound unaudited".
// Throws std::invalid_argument unless inst is an IS instance with |start| = k.
KernelReport kernelize_isd(const DiscoveryInstance& inst, int k, const IsdKernelOptions& opts = {});

// A vertex set C such that every vertex set of size <= k dominating C
// dominates the whole graph; verified exhaustively on construction.
struct DominationCore {
    std::vector<Vertex> core;  // sorted ascending
    int k = 0;
};

// Desk-scale domination-core construction: start from all vertices and
// repeatedly drop the lowest vertex v such that every <= k-set dominating
// C ∖ {v} also dominates v (checked by exhaustive subset enumeration).
// Returns nullopt when no <= k-set dominates the graph at all ("cannot
// dominate"); the returned core is re-verified against the definition.
// Throws ResourceLimitError when subset enumeration exceeds `budget` sets.
std::optional<DominationCore> compute_domination_core(const Graph& g, int k,
                                                      std::uint64_t budget = 50'000'000);

// Dominating-set token instances: compute a domination core C, classify all
// vertices by neighborhood projection N(v) ∩ C, pick for every class and
// every token the lowest-id vertex of the class realizing the token's
// distance to the class, and keep C, the tokens, and the lowest-id shortest
// paths from each token to each of its class representatives. The budget is
// clamped to min(b, 3k²+2k). When the graph cannot be dominated by k
// vertices the canonical no-instance is returned with rejected = true.
// Throws std::invalid_argument unless inst is a DS instance with |start| = k;
// propagates ResourceLimitError from the core computation.
KernelReport kernelize_dsd(const DiscoveryInstance& inst, int k,
                           std::uint64_t core_budget = 50'000'000);

}  // namespace disco
