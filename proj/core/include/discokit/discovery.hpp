#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discokit/graph.hpp"

namespace disco {

enum class Problem { VC, IS, DS, SP, MAT, VCUT };

std::string to_string(Problem p);
std::optional<Problem> problem_from_string(const std::string& s);

enum class TokenKind { Vertex, Edge };

// An unordered set of tokens on vertices or on edges. Tokens are unlabeled:
// two placements occupying the same sites are the same configuration.
struct TokenConfiguration {
    TokenKind kind = TokenKind::Vertex;
    std::vector<Vertex> vertices;  // sorted ascending when kind == Vertex
    std::vector<EdgeId> edges;     // sorted ascending when kind == Edge

    static TokenConfiguration of_vertices(std::vector<Vertex> vs);
    static TokenConfiguration of_edges(std::vector<EdgeId> es);

    size_t size() const { return kind == TokenKind::Vertex ? vertices.size() : edges.size(); }
    bool contains(Vertex v) const;
    bool contains(const EdgeId& e) const;

    bool operator==(const TokenConfiguration&) const = default;
};

struct DiscoveryInstance {
    Problem problem = Problem::VC;
    Graph graph;
    TokenConfiguration start;
    std::int64_t budget = 0;
    // Present exactly for SP and VCUT.
    std::optional<std::pair<Vertex, Vertex>> terminals;

    // Throws std::invalid_argument when any instance invariant fails.
    void validate() const;
};

struct DiscoverySequence {
    std::vector<TokenConfiguration> configs;

    // Number of slides (length of the sequence minus one).
    std::int64_t slides() const {
        return configs.empty() ? 0 : static_cast<std::int64_t>(configs.size()) - 1;
    }
};

struct SolveResult {
    bool yes = false;
    std::optional<std::int64_t> min_slides;
    std::optional<DiscoverySequence> witness;
    std::uint64_t explored = 0;
};

struct SolveOptions {
    std::uint64_t cap_states = 50'000'000;
    bool want_witness = true;
};

// All configurations reachable from c in exactly one slide: a token moves to
// an unoccupied adjacent vertex (vertex tokens) or to an unoccupied edge
// sharing an endpoint (edge tokens). Sorted lexicographically.
std::vector<TokenConfiguration> slide_successors(const Graph& g, const TokenConfiguration& c);

// Whether c solves the instance's source problem (budget is not consulted).
bool is_feasible(const DiscoveryInstance& inst, const TokenConfiguration& c);

// Exact decision by breadth-first search over configurations, depth-limited
// by the budget. On yes: min_slides is the least number of slides and the
// witness is the lexicographically least among the minimum-length sequences.
// Throws ResourceLimitError when more than opts.cap_states configurations
// would be visited.
SolveResult solve(const DiscoveryInstance& inst, const SolveOptions& opts = {});

// nullopt when seq starts at inst.start, takes only legal slides, respects
// the budget, and ends feasible; otherwise a description of the violation.
std::optional<std::string> validate_sequence(const DiscoveryInstance& inst,
                                             const DiscoverySequence& seq);

}  // namespace disco
