#include <string>
#include <utility>
#include <vector>

#include "cross_internal.hpp"
#include "discokit/constructions.hpp"
#include "discokit/errors.hpp"

namespace disco {
namespace {

// Members must exist, each validate, and agree on the vertex count: the
// batch shares one anchor row across members, so every grid needs the same
// number of positions.
int checked_order(const std::vector<HamPathInstance>& members) {
    if (members.empty()) {
        throw BuilderPreconditionError("ordering batch needs at least one member");
    }
    for (const HamPathInstance& member : members) member.validate();
    const int n = members[0].g.num_vertices();
    for (const HamPathInstance& member : members) {
        if (member.g.num_vertices() != n) {
            throw BuilderPreconditionError("ordering batch members must share one vertex count");
        }
    }
    return n;
}

}  // namespace

namespace detail {

SpdLayout emit_spd(GraphBuilder& bld, const std::vector<HamPathInstance>& members) {
    const int n = members[0].g.num_vertices();
    SpdLayout ids;
    ids.a = bld.add_vertex("a");
    ids.b = bld.add_vertex("b");
    ids.anchors.reserve(static_cast<size_t>(n));
    for (int x = 1; x <= n; ++x) {
        ids.anchors.push_back(bld.add_vertex("mv" + std::to_string(x)));
    }

    ids.cell.resize(members.size());
    ids.tail.resize(members.size());
    for (size_t j = 0; j < members.size(); ++j) {
        const std::string mem = "m" + std::to_string(j + 1) + ".";
        auto& grid = ids.cell[j];
        auto& tails = ids.tail[j];
        grid.assign(static_cast<size_t>(n), std::vector<Vertex>(static_cast<size_t>(n), -1));
        tails.assign(static_cast<size_t>(n),
                     std::vector<std::vector<Vertex>>(static_cast<size_t>(n)));
        for (int x = 1; x <= n; ++x) {
            for (int y = 1; y <= n; ++y) {
                const std::string stem =
                    mem + "c" + std::to_string(x) + "." + std::to_string(y);
                const Vertex cell = bld.add_vertex(stem);
                grid[static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)] = cell;
                // Length-n tail from the cell to its position anchor, so the
                // anchor token reaches the cell in exactly n slides.
                if (n == 1) {
                    bld.add_edge(cell, ids.anchors[static_cast<size_t>(x - 1)]);
                } else {
                    tails[static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)] =
                        bld.add_path(cell, ids.anchors[static_cast<size_t>(x - 1)], n - 1,
                                     stem + ".in");
                }
            }
        }
        // Row edges: the first row hangs off terminal a, consecutive rows
        // connect exactly where the member graph has an edge, and the last
        // row hangs off terminal b.
        for (int y = 1; y <= n; ++y) bld.add_edge(ids.a, grid[0][static_cast<size_t>(y - 1)]);
        for (int x = 1; x < n; ++x) {
            for (int y = 1; y <= n; ++y) {
                for (int z = 1; z <= n; ++z) {
                    if (members[j].g.has_edge(y - 1, z - 1)) {
                        bld.add_edge(grid[static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)],
                                     grid[static_cast<size_t>(x)][static_cast<size_t>(z - 1)]);
                    }
                }
            }
        }
        for (int y = 1; y <= n; ++y) {
            bld.add_edge(grid[static_cast<size_t>(n - 1)][static_cast<size_t>(y - 1)], ids.b);
        }
    }
    return ids;
}

}  // namespace detail

LabeledConstruction compose_spd(const std::vector<HamPathInstance>& members) {
    const int n = checked_order(members);

    GraphBuilder bld;
    detail::SpdLayout ids = detail::emit_spd(bld, members);

    std::vector<Vertex> start{ids.a, ids.b};
    start.insert(start.end(), ids.anchors.begin(), ids.anchors.end());

    const std::int64_t budget = static_cast<std::int64_t>(n) * n;
    Graph graph = bld.build();
    DiscoveryInstance inst{Problem::SP, graph,
                           TokenConfiguration::of_vertices(std::move(start)), budget,
                           std::make_pair(ids.a, ids.b)};
    Provenance prov{"compose_spd",
                    "n^2 = " + std::to_string(n) + "^2 = " + std::to_string(budget),
                    std::nullopt,
                    {"members = " + std::to_string(members.size()) +
                         ", positions = " + std::to_string(n),
                     "tokens = n + 2 = " + std::to_string(n + 2)}};
    LabeledConstruction out{std::move(graph), bld.names(), std::nullopt, std::move(inst),
                            std::move(prov)};
    out.validate();
    return out;
}

}  // namespace disco
