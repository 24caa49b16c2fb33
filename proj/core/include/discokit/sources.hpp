#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "discokit/graph.hpp"

namespace disco {

// Multicolored clique instance: the vertex set is partitioned into classes
// of equal size, each class an independent set, and the question is whether
// one vertex can be picked from every class so that the picks are pairwise
// adjacent.
struct MCCInstance {
    Graph g;
    std::vector<std::vector<Vertex>> classes;  // each sorted ascending

    int kappa() const { return static_cast<int>(classes.size()); }
    int class_size() const;

    // Throws std::invalid_argument unless the classes are nonempty, of equal
    // size, sorted, a partition of the vertex set, and independent.
    void validate() const;
};

// Appends fresh isolated vertices to the smaller classes until all classes
// have the size of the largest, returning the padded instance. The classes
// must be sorted, disjoint, and cover the vertex set of g.
MCCInstance pad_classes(const Graph& g, std::vector<std::vector<Vertex>> classes);

// Edges of the instance with one endpoint in class i and the other in class
// j, in ascending edge order.
std::vector<EdgeId> edges_between(const MCCInstance& inst, int i, int j);

struct MCCWitness {
    std::vector<Vertex> picks;  // picks[i] lies in classes[i]
};

struct MCCSolveResult {
    bool yes = false;
    // On yes: the lexicographically least pick tuple.
    std::optional<MCCWitness> witness;
    std::uint64_t explored = 0;
};

struct MCCSolveOptions {
    std::uint64_t cap_tuples = 10'000'000;
};

// Exact decision by enumerating pick tuples in lexicographic order. Throws
// ResourceLimitError when more than opts.cap_tuples tuples would be tested.
MCCSolveResult solve_mcc(const MCCInstance& inst, const MCCSolveOptions& opts = {});

// Hamiltonian path instance over an arbitrary graph.
struct HamPathInstance {
    Graph g;

    // Throws std::invalid_argument when the graph is empty.
    void validate() const;
};

struct HamPathWitness {
    std::vector<Vertex> order;  // visits every vertex exactly once along edges
};

struct HamPathSolveResult {
    bool yes = false;
    // On yes: the lexicographically least vertex order.
    std::optional<HamPathWitness> witness;
    std::uint64_t explored = 0;
};

struct HamPathSolveOptions {
    std::uint64_t cap_nodes = 10'000'000;
};

// Exact decision by depth-first search extending partial paths in ascending
// vertex order. Throws ResourceLimitError when more than opts.cap_nodes
// partial paths would be visited.
HamPathSolveResult solve_hampath(const HamPathInstance& inst,
                                 const HamPathSolveOptions& opts = {});

// Rainbow matching instance: a 2-regular, properly edge-colored graph where
// every color class holds exactly two edges; the question is whether one
// edge per color can be picked so that the picks form a matching.
struct RainbowInstance {
    Graph g;
    std::vector<int> color;  // parallel to g.edges(), values 0..colors()-1

    int colors() const;

    // Throws std::invalid_argument unless the graph is 2-regular, the
    // coloring is proper, and every color is used exactly twice.
    void validate() const;
};

struct RainbowWitness {
    std::vector<EdgeId> by_color;  // entry c is the edge picked for color c
};

struct RainbowSolveResult {
    bool yes = false;
    // On yes: the lexicographically least pick per color.
    std::optional<RainbowWitness> witness;
    std::uint64_t explored = 0;
};

struct RainbowSolveOptions {
    int cap_colors = 24;
};

// Exact decision by enumerating the two choices per color in lexicographic
// order (the lower edge of a color first). Throws ResourceLimitError when
// the color count exceeds opts.cap_colors.
RainbowSolveResult solve_rainbow(const RainbowInstance& inst,
                                 const RainbowSolveOptions& opts = {});

}  // namespace disco
