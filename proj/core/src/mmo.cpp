#include "discokit/mmo.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "discokit/errors.hpp"

namespace disco {

std::int64_t MMOInstance::sigma_total() const {
    return std::accumulate(sigma.begin(), sigma.end(), std::int64_t{0});
}

int MMOInstance::sigma_of(const EdgeId& e) const {
    auto idx = host.edge_index(e);
    if (!idx) throw std::invalid_argument("no such host edge: " + to_string(e));
    return sigma[static_cast<size_t>(*idx)];
}

void MMOInstance::validate() const {
    if (auto why = disco::validate(pd, host)) {
        throw std::invalid_argument("invalid path decomposition: " + *why);
    }
    if (sigma.size() != static_cast<size_t>(host.num_edges())) {
        throw std::invalid_argument("weight list has " + std::to_string(sigma.size()) +
                                    " entries for " + std::to_string(host.num_edges()) +
                                    " edges");
    }
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] < 1) {
            throw std::invalid_argument("weight of edge " + to_string(host.edges()[i]) +
                                        " must be positive");
        }
    }
    if (r < 1) throw std::invalid_argument("out-weight bound must be positive");
}

Vertex tail_of(const MMOInstance& inst, const Orientation& o, int edge_index) {
    const EdgeId& e = inst.host.edges().at(static_cast<size_t>(edge_index));
    return o.flip.at(static_cast<size_t>(edge_index)) ? e.v : e.u;
}

Vertex head_of(const MMOInstance& inst, const Orientation& o, int edge_index) {
    const EdgeId& e = inst.host.edges().at(static_cast<size_t>(edge_index));
    return o.flip.at(static_cast<size_t>(edge_index)) ? e.u : e.v;
}

std::vector<std::int64_t> out_weights(const MMOInstance& inst, const Orientation& o) {
    if (o.flip.size() != static_cast<size_t>(inst.m())) {
        throw std::invalid_argument("orientation has " + std::to_string(o.flip.size()) +
                                    " entries for " + std::to_string(inst.m()) + " edges");
    }
    std::vector<std::int64_t> out(static_cast<size_t>(inst.n()), 0);
    for (int i = 0; i < inst.m(); ++i) {
        out[static_cast<size_t>(tail_of(inst, o, i))] += inst.sigma[static_cast<size_t>(i)];
    }
    return out;
}

bool orientation_feasible(const MMOInstance& inst, const Orientation& o) {
    for (std::int64_t w : out_weights(inst, o)) {
        if (w > inst.r) return false;
    }
    return true;
}

MMOSolveResult solve_mmo(const MMOInstance& inst, const MMOSolveOptions& opts) {
    inst.validate();
    const int m = inst.m();
    if (m > opts.cap_edges) {
        throw ResourceLimitError("orientation search over " + std::to_string(m) +
                                 " edges exceeds the cap of " + std::to_string(opts.cap_edges));
    }

    MMOSolveResult result;
    // The flip sequence read left to right is the mask read from its most
    // significant bit, so ascending masks enumerate in lexicographic order.
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Orientation o;
        o.flip.resize(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            o.flip[static_cast<size_t>(i)] = (mask >> (m - 1 - i)) & 1;
        }
        ++result.explored;
        if (orientation_feasible(inst, o)) {
            result.yes = true;
            result.witness = std::move(o);
            return result;
        }
    }
    return result;
}

std::optional<std::string> shape_mismatch(const MMOInstance& a, const MMOInstance& b) {
    if (a.n() != b.n()) {
        return "vertex counts differ: " + std::to_string(a.n()) + " vs " + std::to_string(b.n());
    }
    if (a.m() != b.m()) {
        return "edge counts differ: " + std::to_string(a.m()) + " vs " + std::to_string(b.m());
    }
    if (a.sigma_total() != b.sigma_total()) {
        return "total weights differ: " + std::to_string(a.sigma_total()) + " vs " +
               std::to_string(b.sigma_total());
    }
    if (a.r != b.r) {
        return "out-weight bounds differ: " + std::to_string(a.r) + " vs " + std::to_string(b.r);
    }
    return std::nullopt;
}

}  // namespace disco
