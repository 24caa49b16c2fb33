#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>

#include "discokit/kernelize.hpp"
#include "kernel_internal.hpp"

namespace disco {

std::optional<Vertex> KernelReport::map_of(Vertex original) const {
    auto it = std::lower_bound(vertex_map.begin(), vertex_map.end(),
                               std::make_pair(original, Vertex{0}),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != vertex_map.end() && it->first == original) return it->second;
    return std::nullopt;
}

namespace detail {

DiscoveryInstance canonical_no_instance(Problem p) {
    DiscoveryInstance inst;
    inst.problem = p;
    inst.graph = Graph(2, {EdgeId(0, 1)});
    inst.start = p == Problem::MAT ? TokenConfiguration::of_edges({})
                                   : TokenConfiguration::of_vertices({});
    inst.budget = 0;
    return inst;
}

KernelReport rejection_report(Problem p, const std::string& note, const std::string& bound) {
    KernelReport report;
    report.kernel = canonical_no_instance(p);
    report.rejected = true;
    report.note = note;
    report.audit.vertex_count = report.kernel.graph.num_vertices();
    report.audit.edge_count = report.kernel.graph.num_edges();
    report.audit.budget = report.kernel.budget;
    report.audit.bound_claimed = bound;
    report.audit.bound_audited = !bound.empty();
    report.audit.bound_satisfied = true;
    return report;
}

}  // namespace detail

namespace {

// Sorted-set intersection.
std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Sorted-set difference a ∖ b.
std::vector<int> subtract(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            return false;
        }
    }
    return true;
}

// Depth-first exact packing: choose `need` candidates (ascending index,
// include-first) whose free parts are pairwise disjoint. Returns the chosen
// indices or empty when impossible. Include-first order makes the result the
// lexicographically least qualifying index set.
bool pack(const std::vector<std::vector<int>>& free_parts, size_t from, int need,
          std::vector<size_t>& chosen, std::vector<int>& used) {
    if (need == 0) return true;
    if (free_parts.size() - from < static_cast<size_t>(need)) return false;
    for (size_t i = from; i + static_cast<size_t>(need) <= free_parts.size(); ++i) {
        if (!disjoint(free_parts[i], used)) continue;
        size_t before = used.size();
        used.insert(used.end(), free_parts[i].begin(), free_parts[i].end());
        std::inplace_merge(used.begin(), used.begin() + static_cast<ptrdiff_t>(before),
                           used.end());
        chosen.push_back(i);
        if (pack(free_parts, i + 1, need - 1, chosen, used)) return true;
        chosen.pop_back();
        // Restore `used` to the pre-insertion state.
        std::vector<int> restored = subtract(used, free_parts[i]);
        used = std::move(restored);
    }
    return false;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const std::vector<std::vector<int>>& family, int d,
                                        int p) {
    if (d < 1 || p < 1) {
        throw std::invalid_argument("sunflower search requires d >= 1 and p >= 1");
    }
    std::vector<std::vector<int>> sets;
    sets.reserve(family.size());
    for (const auto& f : family) {
        std::vector<int> s = f;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.size() != f.size()) {
            throw std::invalid_argument("sunflower search: family member has repeated elements");
        }
        if (static_cast<int>(s.size()) > d) {
            throw std::invalid_argument("sunflower search: family member larger than d");
        }
        // The empty set can never be a petal (petal minus core must be
        // nonempty), so it is dropped rather than rejected.
        if (!s.empty()) sets.push_back(std::move(s));
    }
    std::sort(sets.begin(), sets.end());
    if (std::adjacent_find(sets.begin(), sets.end()) != sets.end()) {
        throw std::invalid_argument("sunflower search: duplicate sets in family");
    }

    // Any sunflower with >= 2 petals has core = (intersection of two of its
    // petals); a single-petal sunflower works with an empty core. Trying the
    // empty set plus every pairwise intersection is therefore exhaustive.
    std::set<std::vector<int>> cores;
    cores.insert({});
    for (size_t i = 0; i < sets.size(); ++i) {
        for (size_t j = i + 1; j < sets.size(); ++j) {
            cores.insert(intersect(sets[i], sets[j]));
        }
    }

    for (const auto& core : cores) {
        std::vector<size_t> members;
        std::vector<std::vector<int>> free_parts;
        for (size_t i = 0; i < sets.size(); ++i) {
            if (!is_subset(core, sets[i])) continue;
            std::vector<int> part = subtract(sets[i], core);
            if (part.empty()) continue;
            members.push_back(i);
            free_parts.push_back(std::move(part));
        }
        std::vector<size_t> chosen;
        std::vector<int> used;
        if (!pack(free_parts, 0, p, chosen, used)) continue;
        Sunflower result;
        result.core = core;
        for (size_t idx : chosen) result.petals.push_back(sets[members[idx]]);
        // Verify the definition directly before returning: pairwise
        // intersections equal the core and no petal collapses into it.
        for (size_t i = 0; i < result.petals.size(); ++i) {
            if (subtract(result.petals[i], result.core).empty()) {
                throw std::logic_error("sunflower search produced an empty petal");
            }
            for (size_t j = i + 1; j < result.petals.size(); ++j) {
                if (intersect(result.petals[i], result.petals[j]) != result.core) {
                    throw std::logic_error("sunflower search produced a non-sunflower");
                }
            }
        }
        return result;
    }
    return std::nullopt;
}

}  // namespace disco
