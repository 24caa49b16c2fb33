#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "discokit/discovery.hpp"
#include "discokit/graph.hpp"
#include "discokit/mmo.hpp"
#include "discokit/pathdecomp.hpp"

namespace disco {

// What a builder promises about its output: which builder produced it, the
// instantiated budget formula (empty when the output carries no instance),
// an upper bound the emitted decomposition is claimed to meet, and notes.
struct Provenance {
    std::string source;
    std::string budget_formula;
    std::optional<int> claimed_width;
    std::vector<std::string> notes;
};

// A built graph with symbolic vertex names, optionally a path decomposition,
// optionally a discovery instance over the same graph, and provenance.
struct LabeledConstruction {
    Graph graph;
    std::vector<std::string> names;  // parallel to vertex ids, unique
    std::optional<PathDecomposition> pd;
    std::optional<DiscoveryInstance> instance;
    Provenance provenance;

    // Id of the vertex carrying `name`; throws std::invalid_argument when
    // the name is absent.
    Vertex vertex_named(const std::string& name) const;

    // Throws std::invalid_argument when a cross-field invariant fails: name
    // count or uniqueness, decomposition validity or claimed width, instance
    // validity, or an instance graph that differs from `graph`.
    void validate() const;
};

// Component standing for one host edge of weight sigma_e: the token pairs
// a1-b1 .. a<sigma_e>-b<sigma_e>, the spare pair a+-b+, and the two
// selection vertices "eu"/"ev" forming a triangle with b+. Requires
// sigma_e >= 1. 2*sigma_e+4 vertices and sigma_e+4 edges.
LabeledConstruction build_edge_gadget(int sigma_e);

// Component standing for one host vertex: hub "w", spokes "x1".."x<r+1>",
// and one pending pair y-z (z a leaf) per unit of weight on each incident
// edge, weights given by `incident_sigma` (may be empty). Requires r >= 1
// and positive weights. 1+(r+1)+2*sum vertices.
LabeledConstruction build_vertex_gadget(int r, const std::vector<int>& incident_sigma);

// The full member graph for one orientation instance: one edge component
// per host edge, one vertex component per host vertex, pair attachments
// wired across (b<i> to both z's of its unit, selection vertices to the
// pending y's of their side). Emits a decomposition of width at most
// width(mmo.pd) + 6. Carries no instance.
LabeledConstruction build_GH(const MMOInstance& mmo);

// Adds the donor component to a member graph built by build_GH: a source
// "s" carrying r*n - sigma_total donor chains "s.d<i>.1/2/3" and one leaf
// "s.p". The source-to-spoke edges are left to the consuming builder; the
// emitted decomposition keeps "s" in every member bag so that wiring stays
// covered, at width at most width(mmo.pd) + 7. Requires r*n >= sigma_total.
LabeledConstruction attach_supplier(const LabeledConstruction& gh, const MMOInstance& mmo);

// Batch selection component for t members over shape (m, sigma_total):
// pick/keep pairs "sel<j>"/"unsel<j>", refill pairs "f<i>"-"g<i>" behind
// hub "h" and "o<i>"-"p<i>" behind hub "q". Requires t, m, sigma_total >= 1.
// 2t + 2*sigma_total + 2m + 2 vertices.
LabeledConstruction build_selector(int t, int m, std::int64_t sigma_total);

}  // namespace disco
