#include <fmt/format.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "discokit/constructions.hpp"
#include "discokit/errors.hpp"
#include "fvs_internal.hpp"

namespace disco {
namespace detail {
namespace {

void check_source(const MCCInstance& inst) {
    inst.validate();
    if (inst.kappa() < 2) {
        throw BuilderPreconditionError("clique builder needs at least two classes");
    }
}

}  // namespace

FvsLayout emit_fvs(GraphBuilder& bld, const MCCInstance& inst, Problem kind) {
    if (kind != Problem::VC && kind != Problem::IS && kind != Problem::DS) {
        throw std::invalid_argument("no clique builder targets " + to_string(kind));
    }
    check_source(inst);
    const int kappa = inst.kappa();
    const int n = inst.class_size();
    const bool leafy = kind == Problem::IS;     // companions, bins, hub pendants
    const bool anchored = kind == Problem::VC;  // seat fillers, feed anchors
    const bool rows_bc = kind != Problem::IS;   // pendant rows behind the landings

    // 1-based position of every source vertex inside its (sorted) class.
    std::vector<int> vcls(inst.g.num_vertices(), -1);
    std::vector<int> vpos(inst.g.num_vertices(), -1);
    for (int c = 0; c < kappa; ++c) {
        for (size_t idx = 0; idx < inst.classes[c].size(); ++idx) {
            vcls[inst.classes[c][idx]] = c;
            vpos[inst.classes[c][idx]] = static_cast<int>(idx) + 1;
        }
    }

    FvsLayout L;
    L.vblocks.resize(static_cast<size_t>(kappa));

    for (int i = 1; i <= kappa; ++i) {
        FvsVertexBlock& vb = L.vblocks[static_cast<size_t>(i - 1)];
        const std::string pre = fmt::format("vb{}.", i);
        vb.t = bld.add_vertex(pre + "t");
        if (leafy) {
            vb.t_extra = bld.add_vertex(pre + "t.leaf");
            bld.add_edge(vb.t, vb.t_extra);
        }
        if (anchored) {
            vb.t_extra = bld.add_vertex(pre + "t.fill");
            bld.add_edge(vb.t, vb.t_extra);
        }
        vb.p.resize(static_cast<size_t>(n));
        vb.q.resize(static_cast<size_t>(n));
        vb.co.resize(static_cast<size_t>(n));
        for (int x = 1; x <= n; ++x) {
            vb.p[x - 1] = bld.add_vertex(fmt::format("{}p{}", pre, x));
            bld.add_edge(vb.t, vb.p[x - 1]);
            for (int j = 1; j <= kappa; ++j) {
                if (j == i) continue;
                for (int z = 1; z <= n; ++z) {
                    Vertex leaf = bld.add_vertex(fmt::format("{}q{}.{}.{}", pre, x, j, z));
                    vb.q[x - 1][j].push_back(leaf);
                    bld.add_edge(vb.p[x - 1], leaf);
                    if (leafy) {
                        Vertex mate =
                            bld.add_vertex(fmt::format("{}q{}.{}.{}.co", pre, x, j, z));
                        vb.co[x - 1][j].push_back(mate);
                        bld.add_edge(leaf, mate);
                    }
                }
            }
        }
        if (leafy) {
            vb.bin = bld.add_vertex(pre + "bin");
            for (const auto& col : vb.co) {
                for (const auto& [j, mates] : col) {
                    for (Vertex mate : mates) bld.add_edge(mate, vb.bin);
                }
            }
            const int cap = n * (n - 1) * (kappa - 1);
            for (int idx = 1; idx <= cap; ++idx) {
                Vertex slot = bld.add_vertex(fmt::format("{}bin.slot{}", pre, idx));
                vb.slots.push_back(slot);
                bld.add_edge(vb.bin, slot);
            }
        }
    }

    for (int i = 1; i <= kappa; ++i) {
        for (int j = i + 1; j <= kappa; ++j) {
            FvsEdgeBlock& eb = L.eblocks[{i, j}];
            const std::string pre = fmt::format("eb{}.{}.", i, j);
            eb.t = bld.add_vertex(pre + "t");
            if (leafy) {
                eb.t_extra = bld.add_vertex(pre + "t.leaf");
                bld.add_edge(eb.t, eb.t_extra);
            }
            if (anchored) {
                eb.t_extra = bld.add_vertex(pre + "t.fill");
                bld.add_edge(eb.t, eb.t_extra);
            }
            const std::vector<EdgeId> between = edges_between(inst, i - 1, j - 1);
            eb.p.resize(between.size());
            eb.q.resize(between.size());
            eb.co.resize(between.size());
            for (size_t e = 0; e < between.size(); ++e) {
                eb.p[e] = bld.add_vertex(fmt::format("{}p{}", pre, e + 1));
                bld.add_edge(eb.t, eb.p[e]);
                for (int l = 1; l <= 2 * n; ++l) {
                    Vertex leaf = bld.add_vertex(fmt::format("{}q{}.{}", pre, e + 1, l));
                    eb.q[e].push_back(leaf);
                    bld.add_edge(eb.p[e], leaf);
                    if (leafy) {
                        Vertex mate = bld.add_vertex(fmt::format("{}q{}.{}.co", pre, e + 1, l));
                        eb.co[e].push_back(mate);
                        bld.add_edge(leaf, mate);
                    }
                }
            }
            if (leafy) {
                eb.bin = bld.add_vertex(pre + "bin");
                for (const auto& mates : eb.co) {
                    for (Vertex mate : mates) bld.add_edge(mate, eb.bin);
                }
                const std::int64_t cap =
                    between.empty()
                        ? 0
                        : 2 * static_cast<std::int64_t>(n) *
                              (static_cast<std::int64_t>(between.size()) - 1);
                for (std::int64_t idx = 1; idx <= cap; ++idx) {
                    Vertex slot = bld.add_vertex(fmt::format("{}bin.slot{}", pre, idx));
                    eb.slots.push_back(slot);
                    bld.add_edge(eb.bin, slot);
                }
            }
        }
    }

    for (int i = 1; i <= kappa; ++i) {
        for (int j = i + 1; j <= kappa; ++j) {
            for (int l : {i, j}) {
                FvsConnector& cn = L.connectors[{i, j, l}];
                const std::string pre = fmt::format("cn{}.{}.{}.", i, j, l);
                cn.s = bld.add_vertex(pre + "s");
                if (leafy) {
                    cn.s_leaf = bld.add_vertex(pre + "s.leaf");
                    bld.add_edge(cn.s, cn.s_leaf);
                }
                if (anchored) {
                    cn.sv = bld.add_vertex(pre + "sv");
                    cn.sv_leaf = bld.add_vertex(pre + "sv.leaf");
                    bld.add_edge(cn.s, cn.sv);
                    bld.add_edge(cn.sv, cn.sv_leaf);
                    cn.se = bld.add_vertex(pre + "se");
                    cn.se_leaf = bld.add_vertex(pre + "se.leaf");
                    bld.add_edge(cn.s, cn.se);
                    bld.add_edge(cn.se, cn.se_leaf);
                }
                cn.r = bld.add_vertex(pre + "r");
                if (leafy) {
                    cn.r_leaf = bld.add_vertex(pre + "r.leaf");
                    bld.add_edge(cn.r, cn.r_leaf);
                }
                if (anchored) {
                    cn.rv = bld.add_vertex(pre + "rv");
                    cn.rv_leaf = bld.add_vertex(pre + "rv.leaf");
                    bld.add_edge(cn.r, cn.rv);
                    bld.add_edge(cn.rv, cn.rv_leaf);
                    cn.re = bld.add_vertex(pre + "re");
                    cn.re_leaf = bld.add_vertex(pre + "re.leaf");
                    bld.add_edge(cn.r, cn.re);
                    bld.add_edge(cn.re, cn.re_leaf);
                }
                for (int x = 1; x <= n; ++x) {
                    Vertex ax = bld.add_vertex(fmt::format("{}a{}", pre, x));
                    cn.a.push_back(ax);
                    bld.add_edge(cn.s, ax);
                    if (rows_bc) {
                        Vertex bx = bld.add_vertex(fmt::format("{}b{}", pre, x));
                        cn.b.push_back(bx);
                        bld.add_edge(ax, bx);
                    }
                }
                for (int x = 1; x <= n; ++x) {
                    Vertex dx = bld.add_vertex(fmt::format("{}d{}", pre, x));
                    cn.d.push_back(dx);
                    bld.add_edge(cn.r, dx);
                    if (rows_bc) {
                        Vertex cx = bld.add_vertex(fmt::format("{}c{}", pre, x));
                        cn.c.push_back(cx);
                        bld.add_edge(cx, dx);
                    }
                }
            }
        }
    }

    // Leaf wiring. Class-block leaves split on z <= x: low indices feed the
    // s side, high indices the r side. Pair-block leaves split the other
    // way around, using the position of the edge's endpoint on that side.
    for (int i = 1; i <= kappa; ++i) {
        for (int j = i + 1; j <= kappa; ++j) {
            const std::vector<EdgeId> between = edges_between(inst, i - 1, j - 1);
            const FvsEdgeBlock& eb = L.eblocks.at({i, j});
            for (int l : {i, j}) {
                const FvsConnector& cn = L.connectors.at({i, j, l});
                const int other = l == i ? j : i;
                const Vertex s_t = anchored ? cn.sv : cn.s;
                const Vertex r_t = anchored ? cn.rv : cn.r;
                const FvsVertexBlock& vb = L.vblocks[static_cast<size_t>(l - 1)];
                for (int x = 1; x <= n; ++x) {
                    const std::vector<Vertex>& qs = vb.q[x - 1].at(other);
                    for (int z = 1; z <= n; ++z) {
                        bld.add_edge(qs[z - 1], z <= x ? s_t : r_t);
                    }
                }
                const Vertex es_t = anchored ? cn.se : cn.s;
                const Vertex er_t = anchored ? cn.re : cn.r;
                for (size_t e = 0; e < between.size(); ++e) {
                    const Vertex end_l =
                        vcls[between[e].u] == l - 1 ? between[e].u : between[e].v;
                    const int x = vpos[end_l];
                    for (int z = 1; z <= n; ++z) {
                        const Vertex leaf = eb.q[e][static_cast<size_t>((l == i ? z : n + z) - 1)];
                        bld.add_edge(leaf, z <= x ? er_t : es_t);
                    }
                }
            }
        }
    }

    return L;
}

}  // namespace detail

FvsConstruction reduce_fvs(Problem target, const MCCInstance& inst) {
    GraphBuilder bld;
    detail::FvsLayout L = detail::emit_fvs(bld, inst, target);
    const std::int64_t kappa = inst.kappa();
    const std::int64_t n = inst.class_size();
    const std::int64_t C = kappa * (kappa - 1) / 2;
    const std::int64_t m = inst.g.num_edges();

    std::vector<Vertex> start;
    for (const detail::FvsVertexBlock& vb : L.vblocks) {
        start.push_back(vb.t);
        if (vb.t_extra != -1) start.push_back(vb.t_extra);
        for (const auto& col : vb.q) {
            for (const auto& [j, leaves] : col) {
                start.insert(start.end(), leaves.begin(), leaves.end());
            }
        }
        for (const auto& col : vb.co) {
            for (const auto& [j, mates] : col) {
                start.insert(start.end(), mates.begin(), mates.end());
            }
        }
    }
    for (const auto& [key, eb] : L.eblocks) {
        start.push_back(eb.t);
        if (eb.t_extra != -1) start.push_back(eb.t_extra);
        for (const auto& leaves : eb.q) start.insert(start.end(), leaves.begin(), leaves.end());
        for (const auto& mates : eb.co) start.insert(start.end(), mates.begin(), mates.end());
    }
    if (target == Problem::VC) {
        for (const auto& [key, cn] : L.connectors) {
            start.push_back(cn.sv);
            start.push_back(cn.se);
            start.push_back(cn.rv);
            start.push_back(cn.re);
        }
    }

    std::int64_t budget = 0;
    std::string formula;
    switch (target) {
        case Problem::VC:
            budget = (12 * n + 2) * C + 2 * kappa;
            formula = fmt::format("(12n+2)*C + 2*kappa = (12*{}+2)*{} + 2*{} = {}", n, C, kappa,
                                  budget);
            break;
        case Problem::IS:
            budget = (4 * n * n + 1) * C + 4 * n * m + kappa;
            formula = fmt::format("(4n^2+1)*C + 4*n*m + kappa = (4*{}^2+1)*{} + 4*{}*{} + {} = {}",
                                  n, C, n, m, kappa, budget);
            break;
        default:
            budget = (8 * n + 1) * C + kappa;
            formula =
                fmt::format("(8n+1)*C + kappa = (8*{}+1)*{} + {} = {}", n, C, kappa, budget);
            break;
    }

    FvsCertificate cert;
    for (const auto& [key, cn] : L.connectors) {
        if (target == Problem::VC) {
            cert.deleted.push_back(cn.sv);
            cert.deleted.push_back(cn.se);
            cert.deleted.push_back(cn.rv);
            cert.deleted.push_back(cn.re);
        } else {
            cert.deleted.push_back(cn.s);
            cert.deleted.push_back(cn.r);
        }
    }
    if (target == Problem::IS) {
        for (const detail::FvsVertexBlock& vb : L.vblocks) cert.deleted.push_back(vb.bin);
        for (const auto& [key, eb] : L.eblocks) cert.deleted.push_back(eb.bin);
    }
    std::sort(cert.deleted.begin(), cert.deleted.end());

    Graph graph = bld.build();
    if (verify_fvs(graph, cert)) {
        throw std::logic_error("clique builder emitted a certificate that leaves a cycle");
    }
    DiscoveryInstance inst_out{target, graph, TokenConfiguration::of_vertices(std::move(start)),
                               budget, std::nullopt};
    Provenance prov{fmt::format("reduce_fvs({})", to_string(target)),
                    formula,
                    std::nullopt,
                    {fmt::format("certificate deletes {} vertices", cert.deleted.size()),
                     fmt::format("classes = {}, class size = {}, cross edges = {}", kappa, n, m)}};
    LabeledConstruction out{std::move(graph), bld.names(), std::nullopt, std::move(inst_out),
                            std::move(prov)};
    out.validate();
    return FvsConstruction{std::move(out), std::move(cert)};
}

}  // namespace disco
