#include "discokit/pathdecomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace disco {

namespace {

bool bag_contains(const std::vector<Vertex>& bag, Vertex v) {
    return std::binary_search(bag.begin(), bag.end(), v);
}

}  // namespace

std::optional<std::string> validate(const PathDecomposition& pd, const Graph& g) {
    const int n = g.num_vertices();
    // Track, per vertex, the first and last bag containing it plus the count
    // of bags containing it; contiguity means count == last - first + 1.
    std::vector<int> first(static_cast<size_t>(n), -1);
    std::vector<int> last(static_cast<size_t>(n), -1);
    std::vector<int> count(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < pd.bags.size(); ++i) {
        const auto& bag = pd.bags[i];
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
            return "bag " + std::to_string(i) + " is not a sorted duplicate-free vertex list";
        }
        for (Vertex v : bag) {
            if (v < 0 || v >= n) {
                return "bag " + std::to_string(i) + " contains out-of-range vertex " +
                       std::to_string(v);
            }
            if (first[static_cast<size_t>(v)] < 0) first[static_cast<size_t>(v)] = static_cast<int>(i);
            last[static_cast<size_t>(v)] = static_cast<int>(i);
            ++count[static_cast<size_t>(v)];
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (first[static_cast<size_t>(v)] < 0) {
            return "vertex " + std::to_string(v) + " appears in no bag";
        }
    }
    for (const EdgeId& e : g.edges()) {
        bool covered = false;
        // Only bags within the intersection of both endpoint intervals can
        // cover the edge; scan that (short) range.
        int lo = std::max(first[static_cast<size_t>(e.u)], first[static_cast<size_t>(e.v)]);
        int hi = std::min(last[static_cast<size_t>(e.u)], last[static_cast<size_t>(e.v)]);
        for (int i = lo; i <= hi && !covered; ++i) {
            const auto& bag = pd.bags[static_cast<size_t>(i)];
            covered = bag_contains(bag, e.u) && bag_contains(bag, e.v);
        }
        if (!covered) {
            return "edge " + to_string(e) + " has no bag containing both endpoints";
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        int span = last[static_cast<size_t>(v)] - first[static_cast<size_t>(v)] + 1;
        if (count[static_cast<size_t>(v)] != span) {
            return "vertex " + std::to_string(v) + " appears in a non-contiguous set of bags";
        }
    }
    return std::nullopt;
}

int width(const PathDecomposition& pd) {
    if (pd.bags.empty()) throw std::invalid_argument("width of an empty decomposition");
    size_t largest = 0;
    for (const auto& bag : pd.bags) largest = std::max(largest, bag.size());
    return static_cast<int>(largest) - 1;
}

bool is_nice(const PathDecomposition& pd) {
    if (pd.bags.empty()) return false;
    if (!pd.bags.front().empty() || !pd.bags.back().empty()) return false;
    for (size_t i = 0; i + 1 < pd.bags.size(); ++i) {
        const auto& a = pd.bags[i];
        const auto& b = pd.bags[i + 1];
        std::vector<Vertex> sym;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(sym));
        if (sym.size() != 1) return false;
    }
    return true;
}

PathDecomposition make_nice(const PathDecomposition& pd, const Graph& g) {
    if (auto violation = validate(pd, g)) {
        throw std::invalid_argument("decomposition not valid: " + *violation);
    }
    PathDecomposition out;
    out.bags.push_back({});
    std::vector<Vertex> current;  // sorted
    auto emit_transition = [&out, &current](const std::vector<Vertex>& target) {
        std::vector<Vertex> to_forget;
        std::set_difference(current.begin(), current.end(), target.begin(), target.end(),
                            std::back_inserter(to_forget));
        std::vector<Vertex> to_introduce;
        std::set_difference(target.begin(), target.end(), current.begin(), current.end(),
                            std::back_inserter(to_introduce));
        // Forgetting before introducing keeps every intermediate bag inside
        // one of the two original bags, so the width never grows.
        for (Vertex v : to_forget) {
            current.erase(std::lower_bound(current.begin(), current.end(), v));
            out.bags.push_back(current);
        }
        for (Vertex v : to_introduce) {
            current.insert(std::lower_bound(current.begin(), current.end(), v), v);
            out.bags.push_back(current);
        }
    };
    for (const auto& bag : pd.bags) emit_transition(bag);
    emit_transition({});
    return out;
}

std::optional<std::vector<Vertex>> verify_fvs(const Graph& g, const FvsCertificate& cert) {
    const int n = g.num_vertices();
    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (Vertex v : cert.deleted) {
        if (v < 0 || v >= n) {
            throw std::invalid_argument("certificate vertex " + std::to_string(v) +
                                        " out of range");
        }
        removed[static_cast<size_t>(v)] = 1;
    }
    // Iterative DFS over the surviving graph looking for a back edge; parent
    // edges are skipped once (simple graphs have no parallel edges).
    std::vector<int> state(static_cast<size_t>(n), 0);  // 0 new, 1 active, 2 done
    std::vector<Vertex> parent(static_cast<size_t>(n), -1);
    for (Vertex root = 0; root < n; ++root) {
        if (removed[static_cast<size_t>(root)] || state[static_cast<size_t>(root)] != 0) continue;
        std::vector<std::pair<Vertex, size_t>> stack;
        stack.emplace_back(root, 0);
        state[static_cast<size_t>(root)] = 1;
        while (!stack.empty()) {
            auto& [x, idx] = stack.back();
            const auto& nb = g.neighbors(x);
            bool descended = false;
            while (idx < nb.size()) {
                Vertex y = nb[idx++];
                if (removed[static_cast<size_t>(y)] || y == parent[static_cast<size_t>(x)]) continue;
                if (state[static_cast<size_t>(y)] == 1) {
                    // Cycle: walk tree parents from x back to y.
                    std::vector<Vertex> cycle{y};
                    for (Vertex w = x; w != y; w = parent[static_cast<size_t>(w)]) {
                        cycle.push_back(w);
                    }
                    std::reverse(cycle.begin() + 1, cycle.end());
                    return cycle;
                }
                if (state[static_cast<size_t>(y)] == 0) {
                    state[static_cast<size_t>(y)] = 1;
                    parent[static_cast<size_t>(y)] = x;
                    stack.emplace_back(y, 0);
                    descended = true;
                    break;
                }
            }
            if (!descended && (stack.back().second >= g.neighbors(stack.back().first).size())) {
                state[static_cast<size_t>(stack.back().first)] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

}  // namespace disco
