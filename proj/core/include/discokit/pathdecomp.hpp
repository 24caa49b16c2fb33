#pragma once

#include <optional>
#include <string>
#include <vector>

#include "discokit/graph.hpp"

namespace disco {

// Ordered sequence of bags. Valid for a graph G when
//   (i)   every vertex of G appears in some bag,
//   (ii)  every edge of G has both endpoints together in some bag,
//   (iii) the bags containing any fixed vertex are consecutive.
struct PathDecomposition {
    std::vector<std::vector<Vertex>> bags;  // each bag sorted ascending
};

// nullopt when valid; otherwise a description of the first violated
// condition together with a witness vertex or edge.
std::optional<std::string> validate(const PathDecomposition& pd, const Graph& g);

// max bag size - 1. Throws std::invalid_argument on an empty bag list.
int width(const PathDecomposition& pd);

// Nice form: first and last bags empty, consecutive bags differ by exactly
// one introduced or one forgotten vertex. Width is preserved exactly.
// Introductions/forgets between two original bags run in ascending id order.
// Throws std::invalid_argument when pd is not valid for g.
PathDecomposition make_nice(const PathDecomposition& pd, const Graph& g);

// True when every pair of consecutive bags differs by exactly one vertex
// and the first and last bags are empty.
bool is_nice(const PathDecomposition& pd);

// Vertex set whose removal is claimed to leave the graph acyclic.
struct FvsCertificate {
    std::vector<Vertex> deleted;
};

// nullopt when G - deleted is acyclic; otherwise a witness cycle.
std::optional<std::vector<Vertex>> verify_fvs(const Graph& g, const FvsCertificate& cert);

}  // namespace disco
