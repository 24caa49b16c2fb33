#include "discokit/sources.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "discokit/errors.hpp"

namespace disco {

int MCCInstance::class_size() const {
    return classes.empty() ? 0 : static_cast<int>(classes.front().size());
}

void MCCInstance::validate() const {
    if (classes.empty()) throw std::invalid_argument("no vertex classes");
    const size_t size = classes.front().size();
    if (size == 0) throw std::invalid_argument("empty vertex class");
    std::vector<char> seen(static_cast<size_t>(g.num_vertices()), 0);
    for (size_t i = 0; i < classes.size(); ++i) {
        const auto& cls = classes[i];
        if (cls.size() != size) {
            throw std::invalid_argument("class " + std::to_string(i) + " has " +
                                        std::to_string(cls.size()) + " vertices, expected " +
                                        std::to_string(size));
        }
        if (!std::is_sorted(cls.begin(), cls.end())) {
            throw std::invalid_argument("class " + std::to_string(i) + " is not sorted");
        }
        for (Vertex v : cls) {
            if (v < 0 || v >= g.num_vertices()) {
                throw std::invalid_argument("class vertex out of range: " + std::to_string(v));
            }
            if (seen[static_cast<size_t>(v)]) {
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in two classes");
            }
            seen[static_cast<size_t>(v)] = 1;
        }
        for (size_t a = 0; a < cls.size(); ++a) {
            for (size_t b = a + 1; b < cls.size(); ++b) {
                if (g.has_edge(cls[a], cls[b])) {
                    throw std::invalid_argument("class " + std::to_string(i) +
                                                " is not independent: edge " +
                                                to_string(EdgeId(cls[a], cls[b])));
                }
            }
        }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!seen[static_cast<size_t>(v)]) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " is in no class");
        }
    }
}

MCCInstance pad_classes(const Graph& g, std::vector<std::vector<Vertex>> classes) {
    size_t target = 0;
    for (const auto& cls : classes) target = std::max(target, cls.size());
    int next = g.num_vertices();
    for (auto& cls : classes) {
        while (cls.size() < target) cls.push_back(next++);
    }
    Graph padded(next, g.edges());
    MCCInstance inst{std::move(padded), std::move(classes)};
    inst.validate();
    return inst;
}

std::vector<EdgeId> edges_between(const MCCInstance& inst, int i, int j) {
    std::vector<char> in_i(static_cast<size_t>(inst.g.num_vertices()), 0);
    std::vector<char> in_j(static_cast<size_t>(inst.g.num_vertices()), 0);
    for (Vertex v : inst.classes.at(static_cast<size_t>(i))) in_i[static_cast<size_t>(v)] = 1;
    for (Vertex v : inst.classes.at(static_cast<size_t>(j))) in_j[static_cast<size_t>(v)] = 1;
    std::vector<EdgeId> out;
    for (const EdgeId& e : inst.g.edges()) {
        const bool fwd = in_i[static_cast<size_t>(e.u)] && in_j[static_cast<size_t>(e.v)];
        const bool rev = in_j[static_cast<size_t>(e.u)] && in_i[static_cast<size_t>(e.v)];
        if (fwd || rev) out.push_back(e);
    }
    return out;
}

MCCSolveResult solve_mcc(const MCCInstance& inst, const MCCSolveOptions& opts) {
    inst.validate();
    const int kappa = inst.kappa();
    const int size = inst.class_size();

    MCCSolveResult result;
    std::vector<int> idx(static_cast<size_t>(kappa), 0);
    while (true) {
        if (++result.explored > opts.cap_tuples) {
            throw ResourceLimitError("pick-tuple search exceeded the cap of " +
                                     std::to_string(opts.cap_tuples));
        }
        std::vector<Vertex> picks(static_cast<size_t>(kappa));
        for (int i = 0; i < kappa; ++i) {
            picks[static_cast<size_t>(i)] =
                inst.classes[static_cast<size_t>(i)][static_cast<size_t>(idx[static_cast<size_t>(i)])];
        }
        bool clique = true;
        for (int a = 0; a < kappa && clique; ++a) {
            for (int b = a + 1; b < kappa && clique; ++b) {
                clique = inst.g.has_edge(picks[static_cast<size_t>(a)], picks[static_cast<size_t>(b)]);
            }
        }
        if (clique) {
            result.yes = true;
            result.witness = MCCWitness{std::move(picks)};
            return result;
        }
        int pos = kappa - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == size - 1) {
            idx[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
    }
    return result;
}

void HamPathInstance::validate() const {
    if (g.num_vertices() == 0) throw std::invalid_argument("empty graph");
}

namespace {

bool extend_path(const Graph& g, std::vector<Vertex>& path, std::vector<char>& used,
                 std::uint64_t cap, std::uint64_t& explored) {
    if (++explored > cap) {
        throw ResourceLimitError("path search exceeded the cap of " + std::to_string(cap));
    }
    if (path.size() == static_cast<size_t>(g.num_vertices())) return true;
    for (Vertex w : g.neighbors(path.back())) {
        if (used[static_cast<size_t>(w)]) continue;
        used[static_cast<size_t>(w)] = 1;
        path.push_back(w);
        if (extend_path(g, path, used, cap, explored)) return true;
        path.pop_back();
        used[static_cast<size_t>(w)] = 0;
    }
    return false;
}

}  // namespace

HamPathSolveResult solve_hampath(const HamPathInstance& inst, const HamPathSolveOptions& opts) {
    inst.validate();
    HamPathSolveResult result;
    for (Vertex s = 0; s < inst.g.num_vertices(); ++s) {
        std::vector<Vertex> path{s};
        std::vector<char> used(static_cast<size_t>(inst.g.num_vertices()), 0);
        used[static_cast<size_t>(s)] = 1;
        if (extend_path(inst.g, path, used, opts.cap_nodes, result.explored)) {
            result.yes = true;
            result.witness = HamPathWitness{std::move(path)};
            return result;
        }
    }
    return result;
}

int RainbowInstance::colors() const {
    int top = -1;
    for (int c : color) top = std::max(top, c);
    return top + 1;
}

void RainbowInstance::validate() const {
    if (color.size() != static_cast<size_t>(g.num_edges())) {
        throw std::invalid_argument("color list has " + std::to_string(color.size()) +
                                    " entries for " + std::to_string(g.num_edges()) + " edges");
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != 2) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v)) + ", expected 2");
        }
    }
    const int kappa = colors();
    std::vector<int> uses(static_cast<size_t>(kappa), 0);
    for (size_t i = 0; i < color.size(); ++i) {
        if (color[i] < 0) throw std::invalid_argument("negative color");
        ++uses[static_cast<size_t>(color[i])];
    }
    for (int c = 0; c < kappa; ++c) {
        if (uses[static_cast<size_t>(c)] != 2) {
            throw std::invalid_argument("color " + std::to_string(c) + " is used " +
                                        std::to_string(uses[static_cast<size_t>(c)]) +
                                        " times, expected 2");
        }
    }
    for (size_t i = 0; i < color.size(); ++i) {
        for (size_t j = i + 1; j < color.size(); ++j) {
            if (color[i] == color[j] && g.edges()[i].shares_endpoint(g.edges()[j])) {
                throw std::invalid_argument("coloring is not proper: edges " +
                                            to_string(g.edges()[i]) + " and " +
                                            to_string(g.edges()[j]) + " share color " +
                                            std::to_string(color[i]));
            }
        }
    }
}

RainbowSolveResult solve_rainbow(const RainbowInstance& inst, const RainbowSolveOptions& opts) {
    inst.validate();
    const int kappa = inst.colors();
    if (kappa > opts.cap_colors) {
        throw ResourceLimitError("rainbow search over " + std::to_string(kappa) +
                                 " colors exceeds the cap of " + std::to_string(opts.cap_colors));
    }

    // The two edges of each color, ascending.
    std::vector<std::vector<EdgeId>> of_color(static_cast<size_t>(kappa));
    for (size_t i = 0; i < inst.color.size(); ++i) {
        of_color[static_cast<size_t>(inst.color[i])].push_back(inst.g.edges()[i]);
    }

    RainbowSolveResult result;
    const std::uint64_t total = std::uint64_t{1} << kappa;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<EdgeId> picks(static_cast<size_t>(kappa));
        for (int c = 0; c < kappa; ++c) {
            picks[static_cast<size_t>(c)] =
                of_color[static_cast<size_t>(c)][(mask >> (kappa - 1 - c)) & 1];
        }
        ++result.explored;
        bool matching = true;
        for (int a = 0; a < kappa && matching; ++a) {
            for (int b = a + 1; b < kappa && matching; ++b) {
                matching = !picks[static_cast<size_t>(a)].shares_endpoint(
                    picks[static_cast<size_t>(b)]);
            }
        }
        if (matching) {
            result.yes = true;
            result.witness = RainbowWitness{std::move(picks)};
            return result;
        }
    }
    return result;
}

}  // namespace disco
