#include "discokit/discovery.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "discokit/errors.hpp"

namespace disco {

std::string to_string(Problem p) {
    switch (p) {
        case Problem::VC: return "VC";
        case Problem::IS: return "IS";
        case Problem::DS: return "DS";
        case Problem::SP: return "SP";
        case Problem::MAT: return "MAT";
        case Problem::VCUT: return "VCUT";
    }
    return "?";
}

std::optional<Problem> problem_from_string(const std::string& s) {
    if (s == "VC") return Problem::VC;
    if (s == "IS") return Problem::IS;
    if (s == "DS") return Problem::DS;
    if (s == "SP") return Problem::SP;
    if (s == "MAT") return Problem::MAT;
    if (s == "VCUT") return Problem::VCUT;
    return std::nullopt;
}

TokenConfiguration TokenConfiguration::of_vertices(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
        throw std::invalid_argument("token configuration has a duplicate vertex");
    }
    TokenConfiguration c;
    c.kind = TokenKind::Vertex;
    c.vertices = std::move(vs);
    return c;
}

TokenConfiguration TokenConfiguration::of_edges(std::vector<EdgeId> es) {
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) {
        throw std::invalid_argument("token configuration has a duplicate edge");
    }
    TokenConfiguration c;
    c.kind = TokenKind::Edge;
    c.edges = std::move(es);
    return c;
}

bool TokenConfiguration::contains(Vertex v) const {
    return kind == TokenKind::Vertex && std::binary_search(vertices.begin(), vertices.end(), v);
}

bool TokenConfiguration::contains(const EdgeId& e) const {
    return kind == TokenKind::Edge && std::binary_search(edges.begin(), edges.end(), e);
}

namespace {

void check_config(const Graph& g, const TokenConfiguration& c) {
    if (c.kind == TokenKind::Vertex) {
        if (!c.edges.empty()) throw std::invalid_argument("vertex configuration carries edges");
        for (Vertex v : c.vertices) {
            if (v < 0 || v >= g.num_vertices()) {
                throw std::invalid_argument("token on out-of-range vertex " + std::to_string(v));
            }
        }
        if (!std::is_sorted(c.vertices.begin(), c.vertices.end()) ||
            std::adjacent_find(c.vertices.begin(), c.vertices.end()) != c.vertices.end()) {
            throw std::invalid_argument("vertex tokens must form a sorted set");
        }
    } else {
        if (!c.vertices.empty()) throw std::invalid_argument("edge configuration carries vertices");
        for (const EdgeId& e : c.edges) {
            if (!g.has_edge(e)) {
                throw std::invalid_argument("token on missing edge " + to_string(e));
            }
        }
        if (!std::is_sorted(c.edges.begin(), c.edges.end()) ||
            std::adjacent_find(c.edges.begin(), c.edges.end()) != c.edges.end()) {
            throw std::invalid_argument("edge tokens must form a sorted set");
        }
    }
}

}  // namespace

void DiscoveryInstance::validate() const {
    TokenKind expected = problem == Problem::MAT ? TokenKind::Edge : TokenKind::Vertex;
    if (start.kind != expected) {
        throw std::invalid_argument("token kind does not match problem " + to_string(problem));
    }
    check_config(graph, start);
    if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
    bool needs_terminals = problem == Problem::SP || problem == Problem::VCUT;
    if (needs_terminals != terminals.has_value()) {
        throw std::invalid_argument(needs_terminals ? "problem requires a terminal pair"
                                                    : "problem takes no terminals");
    }
    if (terminals) {
        auto [a, b] = *terminals;
        if (a < 0 || a >= graph.num_vertices() || b < 0 || b >= graph.num_vertices() || a == b) {
            throw std::invalid_argument("terminals must be two distinct vertices of the graph");
        }
        if (problem == Problem::VCUT && (start.contains(a) || start.contains(b))) {
            throw std::invalid_argument("cut terminals may not carry start tokens");
        }
    }
}

namespace {

// The solver works over "sites": vertex ids for vertex tokens, indices into
// g.edges() for edge tokens. A configuration is a sorted site-id vector.
using SiteConfig = std::vector<std::int32_t>;

struct SiteConfigHash {
    size_t operator()(const SiteConfig& c) const {
        // FNV-1a over the site ids.
        std::uint64_t h = 1469598103934665603ull;
        for (std::int32_t x : c) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct SiteSpace {
    const Graph* g = nullptr;
    TokenKind kind = TokenKind::Vertex;
    std::vector<std::vector<std::int32_t>> adj;  // sorted per site

    static SiteSpace make(const Graph& g, TokenKind kind) {
        SiteSpace s;
        s.g = &g;
        s.kind = kind;
        if (kind == TokenKind::Vertex) {
            s.adj.resize(static_cast<size_t>(g.num_vertices()));
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                const auto& nb = g.neighbors(v);
                s.adj[static_cast<size_t>(v)].assign(nb.begin(), nb.end());
            }
        } else {
            const auto& edges = g.edges();
            std::vector<std::vector<std::int32_t>> incidence(
                static_cast<size_t>(g.num_vertices()));
            for (size_t i = 0; i < edges.size(); ++i) {
                incidence[static_cast<size_t>(edges[i].u)].push_back(static_cast<std::int32_t>(i));
                incidence[static_cast<size_t>(edges[i].v)].push_back(static_cast<std::int32_t>(i));
            }
            s.adj.resize(edges.size());
            for (size_t i = 0; i < edges.size(); ++i) {
                auto& out = s.adj[i];
                for (Vertex endpoint : {edges[i].u, edges[i].v}) {
                    for (std::int32_t j : incidence[static_cast<size_t>(endpoint)]) {
                        if (j != static_cast<std::int32_t>(i)) out.push_back(j);
                    }
                }
                std::sort(out.begin(), out.end());
                out.erase(std::unique(out.begin(), out.end()), out.end());
            }
        }
        return s;
    }

    SiteConfig encode(const TokenConfiguration& c) const {
        SiteConfig out;
        if (kind == TokenKind::Vertex) {
            out.assign(c.vertices.begin(), c.vertices.end());
        } else {
            out.reserve(c.edges.size());
            for (const EdgeId& e : c.edges) out.push_back(*g->edge_index(e));
            std::sort(out.begin(), out.end());
        }
        return out;
    }

    TokenConfiguration decode(const SiteConfig& c) const {
        if (kind == TokenKind::Vertex) {
            return TokenConfiguration::of_vertices({c.begin(), c.end()});
        }
        std::vector<EdgeId> es;
        es.reserve(c.size());
        for (std::int32_t i : c) es.push_back(g->edges()[static_cast<size_t>(i)]);
        return TokenConfiguration::of_edges(std::move(es));
    }

    // Successors in deterministic order: tokens in ascending position, then
    // targets in ascending position. Each successor is a sorted site set.
    template <typename Fn>
    void for_each_successor(const SiteConfig& c, Fn&& fn) const {
        for (size_t ti = 0; ti < c.size(); ++ti) {
            for (std::int32_t target : adj[static_cast<size_t>(c[ti])]) {
                if (std::binary_search(c.begin(), c.end(), target)) continue;
                SiteConfig next;
                next.reserve(c.size());
                for (size_t j = 0; j < c.size(); ++j) {
                    if (j != ti) next.push_back(c[j]);
                }
                next.insert(std::lower_bound(next.begin(), next.end(), target), target);
                fn(next);
            }
        }
    }
};

// Per-instance feasibility tester working directly on site configurations,
// with whatever can be precomputed done once up front.
class Feasibility {
public:
    Feasibility(const DiscoveryInstance& inst, const SiteSpace& space)
        : inst_(inst), occupied_(space.adj.size(), 0) {
        if (inst.problem == Problem::SP) {
            dist_a_ = inst.graph.distances_from(inst.terminals->first);
            span_ = dist_a_[static_cast<size_t>(inst.terminals->second)];
        }
    }

    bool operator()(const SiteConfig& c) {
        switch (inst_.problem) {
            case Problem::VC: return vc(c);
            case Problem::IS: return is(c);
            case Problem::DS: return ds(c);
            case Problem::SP: return sp(c);
            case Problem::MAT: return mat(c);
            case Problem::VCUT: return vcut(c);
        }
        return false;
    }

private:
    struct OccupancyGuard {
        std::vector<char>& occ;
        const SiteConfig& c;
        OccupancyGuard(std::vector<char>& occ, const SiteConfig& c) : occ(occ), c(c) {
            for (auto s : c) occ[static_cast<size_t>(s)] = 1;
        }
        ~OccupancyGuard() {
            for (auto s : c) occ[static_cast<size_t>(s)] = 0;
        }
    };

    bool vc(const SiteConfig& c) {
        OccupancyGuard guard(occupied_, c);
        for (const EdgeId& e : inst_.graph.edges()) {
            if (!occupied_[static_cast<size_t>(e.u)] && !occupied_[static_cast<size_t>(e.v)]) {
                return false;
            }
        }
        return true;
    }

    bool is(const SiteConfig& c) {
        OccupancyGuard guard(occupied_, c);
        for (const EdgeId& e : inst_.graph.edges()) {
            if (occupied_[static_cast<size_t>(e.u)] && occupied_[static_cast<size_t>(e.v)]) {
                return false;
            }
        }
        return true;
    }

    bool ds(const SiteConfig& c) {
        OccupancyGuard guard(occupied_, c);
        for (Vertex v = 0; v < inst_.graph.num_vertices(); ++v) {
            if (occupied_[static_cast<size_t>(v)]) continue;
            bool dominated = false;
            for (Vertex w : inst_.graph.neighbors(v)) {
                if (occupied_[static_cast<size_t>(w)]) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) return false;
        }
        return true;
    }

    bool sp(const SiteConfig& c) {
        if (span_ < 0) return false;
        if (static_cast<int>(c.size()) != span_ + 1) return false;
        // Exactly one token per BFS layer 0..span from terminal a, with
        // consecutive representatives adjacent: precisely a shortest path.
        rep_.assign(static_cast<size_t>(span_) + 1, -1);
        for (Vertex v : c) {
            int d = dist_a_[static_cast<size_t>(v)];
            if (d < 0 || d > span_ || rep_[static_cast<size_t>(d)] != -1) return false;
            rep_[static_cast<size_t>(d)] = v;
        }
        if (rep_[0] != inst_.terminals->first ||
            rep_[static_cast<size_t>(span_)] != inst_.terminals->second) {
            return false;
        }
        for (int i = 0; i < span_; ++i) {
            if (!inst_.graph.has_edge(rep_[static_cast<size_t>(i)],
                                      rep_[static_cast<size_t>(i) + 1])) {
                return false;
            }
        }
        return true;
    }

    bool mat(const SiteConfig& c) {
        const auto& edges = inst_.graph.edges();
        for (size_t i = 0; i < c.size(); ++i) {
            for (size_t j = i + 1; j < c.size(); ++j) {
                if (edges[static_cast<size_t>(c[i])].shares_endpoint(
                        edges[static_cast<size_t>(c[j])])) {
                    return false;
                }
            }
        }
        return true;
    }

    bool vcut(const SiteConfig& c) {
        auto [a, b] = *inst_.terminals;
        if (std::binary_search(c.begin(), c.end(), a) ||
            std::binary_search(c.begin(), c.end(), b)) {
            return false;
        }
        return inst_.graph.separates(c, a, b);
    }

    const DiscoveryInstance& inst_;
    std::vector<char> occupied_;
    std::vector<int> dist_a_;
    std::vector<Vertex> rep_;
    int span_ = -1;
};

}  // namespace

std::vector<TokenConfiguration> slide_successors(const Graph& g, const TokenConfiguration& c) {
    check_config(g, c);
    SiteSpace space = SiteSpace::make(g, c.kind);
    SiteConfig start = space.encode(c);
    std::vector<SiteConfig> raw;
    space.for_each_successor(start, [&raw](const SiteConfig& next) { raw.push_back(next); });
    std::sort(raw.begin(), raw.end());
    std::vector<TokenConfiguration> out;
    out.reserve(raw.size());
    for (const SiteConfig& sc : raw) out.push_back(space.decode(sc));
    return out;
}

bool is_feasible(const DiscoveryInstance& inst, const TokenConfiguration& c) {
    TokenKind expected = inst.problem == Problem::MAT ? TokenKind::Edge : TokenKind::Vertex;
    if (c.kind != expected) {
        throw std::invalid_argument("token kind does not match problem " + to_string(inst.problem));
    }
    check_config(inst.graph, c);
    SiteSpace space = SiteSpace::make(inst.graph, c.kind);
    Feasibility feasible(inst, space);
    return feasible(space.encode(c));
}

SolveResult solve(const DiscoveryInstance& inst, const SolveOptions& opts) {
    inst.validate();
    SiteSpace space = SiteSpace::make(inst.graph, inst.start.kind);
    Feasibility feasible(inst, space);
    SiteConfig start = space.encode(inst.start);

    std::unordered_map<SiteConfig, std::int32_t, SiteConfigHash> depth_of;
    depth_of.emplace(start, 0);
    std::vector<SiteConfig> frontier{start};
    std::int64_t depth = 0;

    std::vector<SiteConfig> goals;
    bool found = false;
    while (true) {
        std::sort(frontier.begin(), frontier.end());
        for (const SiteConfig& c : frontier) {
            if (feasible(c)) goals.push_back(c);
        }
        if (!goals.empty()) {
            found = true;
            break;
        }
        if (depth == inst.budget) break;
        std::vector<SiteConfig> next;
        for (const SiteConfig& c : frontier) {
            space.for_each_successor(c, [&](const SiteConfig& s) {
                if (depth_of.emplace(s, static_cast<std::int32_t>(depth + 1)).second) {
                    next.push_back(s);
                }
            });
            if (depth_of.size() > opts.cap_states) {
                throw ResourceLimitError("state-space cap " + std::to_string(opts.cap_states) +
                                         " exceeded while solving");
            }
        }
        if (next.empty()) break;
        frontier = std::move(next);
        ++depth;
    }

    SolveResult result;
    result.explored = depth_of.size();
    if (!found) return result;

    result.yes = true;
    result.min_slides = depth;
    if (!opts.want_witness) return result;

    // Backward labeling from the goal set: goal_dist = slides still needed.
    // Only states already explored forward can lie on a shortest sequence.
    std::unordered_map<SiteConfig, std::int32_t, SiteConfigHash> goal_dist;
    std::vector<SiteConfig> back_frontier;
    for (const SiteConfig& gconf : goals) {
        goal_dist.emplace(gconf, 0);
        back_frontier.push_back(gconf);
    }
    for (std::int32_t db = 1; db <= depth && !back_frontier.empty(); ++db) {
        std::vector<SiteConfig> next;
        for (const SiteConfig& c : back_frontier) {
            space.for_each_successor(c, [&](const SiteConfig& s) {
                auto it = depth_of.find(s);
                if (it == depth_of.end()) return;  // never on a shortest sequence
                if (goal_dist.emplace(s, db).second) next.push_back(s);
            });
        }
        back_frontier = std::move(next);
    }

    // Forward greedy reconstruction: from each position take the least
    // successor that stays on some minimum-length sequence. This yields the
    // lexicographically least witness read left to right.
    DiscoverySequence seq;
    seq.configs.push_back(space.decode(start));
    SiteConfig cur = start;
    for (std::int64_t i = 0; i < depth; ++i) {
        std::optional<SiteConfig> best;
        space.for_each_successor(cur, [&](const SiteConfig& s) {
            auto itd = depth_of.find(s);
            if (itd == depth_of.end() || itd->second != i + 1) return;
            auto itg = goal_dist.find(s);
            if (itg == goal_dist.end() || itg->second != depth - (i + 1)) return;
            if (!best || s < *best) best = s;
        });
        cur = *best;
        seq.configs.push_back(space.decode(cur));
    }
    result.witness = std::move(seq);
    return result;
}

std::optional<std::string> validate_sequence(const DiscoveryInstance& inst,
                                             const DiscoverySequence& seq) {
    inst.validate();
    if (seq.configs.empty()) return "sequence is empty";
    for (size_t i = 0; i < seq.configs.size(); ++i) {
        const TokenConfiguration& c = seq.configs[i];
        if (c.kind != inst.start.kind) {
            return "configuration " + std::to_string(i) + " has the wrong token kind";
        }
        try {
            check_config(inst.graph, c);
        } catch (const std::invalid_argument& ex) {
            return "configuration " + std::to_string(i) + ": " + ex.what();
        }
    }
    if (!(seq.configs.front() == inst.start)) {
        return "sequence does not start at the instance start";
    }
    if (seq.slides() > inst.budget) {
        return "sequence uses " + std::to_string(seq.slides()) + " slides, budget is " +
               std::to_string(inst.budget);
    }
    SiteSpace space = SiteSpace::make(inst.graph, inst.start.kind);
    for (size_t i = 0; i + 1 < seq.configs.size(); ++i) {
        SiteConfig a = space.encode(seq.configs[i]);
        SiteConfig b = space.encode(seq.configs[i + 1]);
        if (a.size() != b.size()) {
            return "step " + std::to_string(i) + " changes the token count";
        }
        std::vector<std::int32_t> removed, added;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(removed));
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(added));
        if (removed.size() != 1 || added.size() != 1) {
            return "step " + std::to_string(i) + " is not a single token slide";
        }
        const auto& nb = space.adj[static_cast<size_t>(removed[0])];
        if (!std::binary_search(nb.begin(), nb.end(), added[0])) {
            return "step " + std::to_string(i) + " moves a token between non-adjacent positions";
        }
    }
    Feasibility feasible(inst, space);
    if (!feasible(space.encode(seq.configs.back()))) {
        return "final configuration is not a solution";
    }
    return std::nullopt;
}

}  // namespace disco
