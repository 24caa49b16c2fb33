#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cross_internal.hpp"
#include "discokit/constructions.hpp"
#include "discokit/errors.hpp"

namespace disco {
namespace {

// Members must exist, each validate, and agree on shape: the slack groups
// are wired to every member's level vertices, so edge counts and color
// counts have to line up across the batch. Two colors are the floor —
// with a single level there would be no level pair left to thread.
void check_members(const std::vector<RainbowInstance>& members) {
    if (members.empty()) {
        throw BuilderPreconditionError("separator batch needs at least one member");
    }
    for (const RainbowInstance& member : members) member.validate();
    const int n = members[0].g.num_vertices();
    const int kappa = members[0].colors();
    if (kappa < 2) {
        throw BuilderPreconditionError("separator batch needs at least two edge colors");
    }
    for (const RainbowInstance& member : members) {
        if (member.g.num_vertices() != n || member.colors() != kappa) {
            throw BuilderPreconditionError("separator batch members must share one shape");
        }
    }
}

// Entry and exit copies of two edges may not both stay open on adjacent
// levels when the edges clash: same color (including the same edge) or a
// shared endpoint.
bool clashes(const RainbowInstance& src, int h, int g) {
    if (src.color[static_cast<size_t>(h)] == src.color[static_cast<size_t>(g)]) return true;
    const EdgeId& eh = src.g.edges()[static_cast<size_t>(h)];
    const EdgeId& eg = src.g.edges()[static_cast<size_t>(g)];
    return eh.u == eg.u || eh.u == eg.v || eh.v == eg.u || eh.v == eg.v;
}

}  // namespace

namespace detail {

VcutLayout emit_vcutd(GraphBuilder& bld, const std::vector<RainbowInstance>& members) {
    // Pad to a power of two (at least two) by repeating the last member, so
    // the selection tree is a complete binary tree with a level below the
    // root. Repeats change nothing: the batch asks whether any member works.
    const size_t t = std::max<size_t>(2, std::bit_ceil(members.size()));
    const int log_t = std::countr_zero(t);
    const int m = members[0].g.num_edges();
    const int kappa = members[0].colors();
    const int levels = kappa - 1;
    const std::int64_t len =
        static_cast<std::int64_t>(m) * m * m + log_t;  // spacing-path length
    const int inner = static_cast<int>(len) - 1;       // vertices inside one spacing path

    VcutLayout ids;
    ids.log_t = log_t;
    ids.long_len = len;
    ids.a1 = bld.add_vertex("a1");
    ids.b1 = bld.add_vertex("b1");
    for (int d = 1; d <= log_t; ++d) {
        ids.guards.push_back(bld.add_vertex("guard.d" + std::to_string(d)));
    }

    ids.members.resize(t);
    for (size_t r = 0; r < t; ++r) {
        const RainbowInstance& src = members[std::min(r, members.size() - 1)];
        const std::string mem = "m" + std::to_string(r + 1) + ".";
        VcutMember& gm = ids.members[r];
        gm.s = bld.add_vertex(mem + "s");
        gm.t = bld.add_vertex(mem + "t");
        gm.entry.resize(static_cast<size_t>(levels));
        gm.exit.resize(static_cast<size_t>(levels));
        for (int p = 1; p <= levels; ++p) {
            const std::string lvl = mem + "l" + std::to_string(p) + ".";
            gm.s_level.push_back(bld.add_vertex(lvl + "s"));
            gm.t_level.push_back(bld.add_vertex(lvl + "t"));
            for (int h = 1; h <= m; ++h) {
                const std::string edge = lvl + "e" + std::to_string(h) + ".";
                gm.entry[static_cast<size_t>(p - 1)].push_back(bld.add_vertex(edge + "1"));
                gm.exit[static_cast<size_t>(p - 1)].push_back(bld.add_vertex(edge + "2"));
            }
        }
        // Spacing paths: hub to level hubs, level hubs to their edge copies.
        for (int p = 1; p <= levels; ++p) {
            const std::string lvl = mem + "l" + std::to_string(p) + ".";
            bld.add_path(gm.s, gm.s_level[static_cast<size_t>(p - 1)], inner, lvl + "s.up");
        }
        for (int p = 1; p <= levels; ++p) {
            const std::string lvl = mem + "l" + std::to_string(p) + ".";
            bld.add_path(gm.t, gm.t_level[static_cast<size_t>(p - 1)], inner, lvl + "t.up");
        }
        for (int p = 1; p <= levels; ++p) {
            const std::string lvl = mem + "l" + std::to_string(p) + ".";
            for (int h = 1; h <= m; ++h) {
                bld.add_path(gm.s_level[static_cast<size_t>(p - 1)],
                             gm.entry[static_cast<size_t>(p - 1)][static_cast<size_t>(h - 1)],
                             inner, lvl + "e" + std::to_string(h) + ".1.in");
            }
        }
        for (int p = 1; p <= levels; ++p) {
            const std::string lvl = mem + "l" + std::to_string(p) + ".";
            for (int h = 1; h <= m; ++h) {
                bld.add_path(gm.t_level[static_cast<size_t>(p - 1)],
                             gm.exit[static_cast<size_t>(p - 1)][static_cast<size_t>(h - 1)],
                             inner, lvl + "e" + std::to_string(h) + ".2.in");
            }
        }
        // Clash paths: an entry copy at level p and an exit copy at any
        // level q >= p are joined whenever their edges clash, so both stay
        // blocked unless the open copies describe one matching.
        for (int p = 1; p <= levels; ++p) {
            for (int q = p; q <= levels; ++q) {
                for (int h = 1; h <= m; ++h) {
                    for (int g = 1; g <= m; ++g) {
                        if (!clashes(src, h - 1, g - 1)) continue;
                        bld.add_path(
                            gm.entry[static_cast<size_t>(p - 1)][static_cast<size_t>(h - 1)],
                            gm.exit[static_cast<size_t>(q - 1)][static_cast<size_t>(g - 1)],
                            inner,
                            mem + "cf" + std::to_string(p) + "." + std::to_string(q) + ".e" +
                                std::to_string(h) + "." + std::to_string(g));
                    }
                }
            }
        }
        // Forwarding paths: an exit copy feeds every next-level entry copy
        // of a different edge.
        for (int p = 1; p + 1 <= levels; ++p) {
            for (int h = 1; h <= m; ++h) {
                for (int g = 1; g <= m; ++g) {
                    if (h == g) continue;
                    bld.add_path(gm.exit[static_cast<size_t>(p - 1)][static_cast<size_t>(h - 1)],
                                 gm.entry[static_cast<size_t>(p)][static_cast<size_t>(g - 1)],
                                 inner,
                                 mem + "fw" + std::to_string(p) + ".e" + std::to_string(h) + "." +
                                     std::to_string(g));
                }
            }
        }
    }

    // Selection tree: complete binary tree rooted at a1 whose leaves are the
    // member entry hubs, every tree edge stretched into a spacing path. The
    // depth-d guard sees every depth-d node through a single edge.
    ids.tree.resize(static_cast<size_t>(log_t) + 1);
    ids.tree[0] = {ids.a1};
    for (int d = 1; d <= log_t; ++d) {
        const size_t width = size_t{1} << d;
        for (size_t q = 0; q < width; ++q) {
            const std::string stem = "tree.d" + std::to_string(d) + ".n" + std::to_string(q);
            const Vertex node =
                (d < log_t) ? bld.add_vertex(stem) : ids.members[q].s;
            ids.tree[static_cast<size_t>(d)].push_back(node);
            bld.add_path(ids.tree[static_cast<size_t>(d - 1)][q >> 1], node, inner, stem + ".up");
        }
    }
    for (int d = 1; d <= log_t; ++d) {
        for (Vertex node : ids.tree[static_cast<size_t>(d)]) {
            bld.add_edge(ids.guards[static_cast<size_t>(d - 1)], node);
        }
    }
    for (size_t r = 0; r < t; ++r) {
        bld.add_path(ids.members[r].t, ids.b1, inner,
                     "m" + std::to_string(r + 1) + ".t.out");
    }

    // Slack groups: group i holds m-1 fresh tokened edges; the designated
    // endpoint of each sees one level side of every member through single
    // edges (odd groups the entry side, even groups the exit side of level
    // ceil(i/2)), and every member hub reaches it through a spacing path.
    const int groups = 2 * levels;
    ids.slack_u.resize(static_cast<size_t>(groups));
    ids.slack_mate.resize(static_cast<size_t>(groups));
    for (int i = 1; i <= groups; ++i) {
        for (int j = 1; j + 1 <= m; ++j) {
            const std::string stem = "sl" + std::to_string(i) + "." + std::to_string(j);
            const Vertex u = bld.add_vertex(stem + ".u");
            const Vertex mate = bld.add_vertex(stem + ".v");
            bld.add_edge(u, mate);
            ids.slack_u[static_cast<size_t>(i - 1)].push_back(u);
            ids.slack_mate[static_cast<size_t>(i - 1)].push_back(mate);
        }
    }
    for (int i = 1; i <= groups; ++i) {
        const int p = (i + 1) / 2;
        for (size_t j = 0; j + 1 < static_cast<size_t>(m); ++j) {
            const Vertex u = ids.slack_u[static_cast<size_t>(i - 1)][j];
            for (size_t r = 0; r < t; ++r) {
                const VcutMember& gm = ids.members[r];
                const auto& side =
                    (i % 2 == 1) ? gm.entry[static_cast<size_t>(p - 1)]
                                 : gm.exit[static_cast<size_t>(p - 1)];
                for (Vertex copy : side) bld.add_edge(u, copy);
            }
        }
    }
    for (int i = 1; i <= groups; ++i) {
        for (size_t j = 0; j + 1 < static_cast<size_t>(m); ++j) {
            const std::string stem = "sl" + std::to_string(i) + "." + std::to_string(j + 1);
            const Vertex u = ids.slack_u[static_cast<size_t>(i - 1)][j];
            for (size_t r = 0; r < t; ++r) {
                bld.add_path(ids.members[r].s, u, inner, stem + ".s" + std::to_string(r + 1));
                bld.add_path(ids.members[r].t, u, inner, stem + ".t" + std::to_string(r + 1));
            }
        }
    }
    return ids;
}

}  // namespace detail

LabeledConstruction compose_vcutd(const std::vector<RainbowInstance>& members) {
    check_members(members);
    const int m = members[0].g.num_edges();
    const int kappa = members[0].colors();

    GraphBuilder bld;
    detail::VcutLayout ids = detail::emit_vcutd(bld, members);

    std::vector<Vertex> start = ids.guards;
    for (size_t i = 0; i < ids.slack_u.size(); ++i) {
        for (size_t j = 0; j < ids.slack_u[i].size(); ++j) {
            start.push_back(ids.slack_u[i][j]);
            start.push_back(ids.slack_mate[i][j]);
        }
    }

    const std::int64_t budget =
        ids.log_t + std::int64_t{2} * (2 * kappa - 2) * (m - 1);
    Graph graph = bld.build();
    DiscoveryInstance inst{Problem::VCUT, graph,
                           TokenConfiguration::of_vertices(std::move(start)), budget,
                           std::make_pair(ids.a1, ids.b1)};
    Provenance prov{
        "compose_vcutd",
        "log t + 2*(2*kappa - 2)*(m - 1) = " + std::to_string(ids.log_t) + " + 2*(2*" +
            std::to_string(kappa) + " - 2)*(" + std::to_string(m) + " - 1) = " +
            std::to_string(budget),
        std::nullopt,
        {"members = " + std::to_string(members.size()) + ", padded to " +
             std::to_string(ids.members.size()),
         "colors = " + std::to_string(kappa) + ", edges per member = " + std::to_string(m),
         "spacing-path length = " + std::to_string(ids.long_len),
         "tokens = log t + 4*(kappa - 1)*(m - 1) = " + std::to_string(budget)}};
    LabeledConstruction out{std::move(graph), bld.names(), std::nullopt, std::move(inst),
                            std::move(prov)};
    out.validate();
    return out;
}

}  // namespace disco
