#include "discokit/gadgets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "discokit/errors.hpp"
#include "gadget_internal.hpp"

namespace disco {

Vertex LabeledConstruction::vertex_named(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<Vertex>(i);
    }
    throw std::invalid_argument("no vertex named \"" + name + "\"");
}

void LabeledConstruction::validate() const {
    if (names.size() != static_cast<size_t>(graph.num_vertices())) {
        throw std::invalid_argument("name list has " + std::to_string(names.size()) +
                                    " entries for " + std::to_string(graph.num_vertices()) +
                                    " vertices");
    }
    std::set<std::string> seen;
    for (const std::string& name : names) {
        if (!seen.insert(name).second) {
            throw std::invalid_argument("duplicate vertex name \"" + name + "\"");
        }
    }
    if (pd) {
        if (auto why = disco::validate(*pd, graph)) {
            throw std::invalid_argument("invalid decomposition: " + *why);
        }
        if (provenance.claimed_width && width(*pd) > *provenance.claimed_width) {
            throw std::invalid_argument("decomposition width " + std::to_string(width(*pd)) +
                                        " exceeds the claimed bound " +
                                        std::to_string(*provenance.claimed_width));
        }
    }
    if (instance) {
        if (instance->graph.num_vertices() != graph.num_vertices() ||
            instance->graph.edges() != graph.edges()) {
            throw std::invalid_argument("instance graph differs from the construction graph");
        }
        instance->validate();
    }
}

namespace detail {

const SideSlot& GHLayout::side_at(const Graph& host, int idx, Vertex end) const {
    const EdgeId& e = host.edges().at(static_cast<size_t>(idx));
    if (end == e.u) return sides[static_cast<size_t>(idx)][0];
    if (end == e.v) return sides[static_cast<size_t>(idx)][1];
    throw std::invalid_argument("vertex " + std::to_string(end) + " is not an endpoint of " +
                                to_string(e));
}

Vertex GHLayout::selection_at(const Graph& host, int idx, Vertex end) const {
    const EdgeId& e = host.edges().at(static_cast<size_t>(idx));
    if (end == e.u) return edges[static_cast<size_t>(idx)].eu;
    if (end == e.v) return edges[static_cast<size_t>(idx)].ev;
    throw std::invalid_argument("vertex " + std::to_string(end) + " is not an endpoint of " +
                                to_string(e));
}

std::int64_t donor_count(const MMOInstance& mmo) {
    return static_cast<std::int64_t>(mmo.r) * mmo.n() - mmo.sigma_total();
}

GHLayout emit_gh(GraphBuilder& bld, const MMOInstance& mmo, const GHOptions& opts) {
    const Graph& host = mmo.host;
    const int m = host.num_edges();
    const int n = host.num_vertices();
    const int r = mmo.r;
    const bool vc = opts.flavor == GHFlavor::SubdividedVC;
    const bool ds = opts.flavor == GHFlavor::SubdividedDS;
    if (opts.with_dominator && !ds) {
        throw std::logic_error("the pending-split guard needs the twice-split flavor");
    }
    const std::string& P = opts.prefix;

    GHLayout layout;
    layout.flavor = opts.flavor;
    layout.edges.resize(static_cast<size_t>(m));
    layout.sides.resize(static_cast<size_t>(m));
    layout.verts.resize(static_cast<size_t>(n));

    // Host-edge components.
    for (int t = 0; t < m; ++t) {
        const int se = mmo.sigma[static_cast<size_t>(t)];
        EdgeSlot& E = layout.edges[static_cast<size_t>(t)];
        const std::string ep = P + "e" + std::to_string(t) + ".";
        for (int i = 1; i <= se; ++i) {
            Vertex a = bld.add_vertex(ep + "a" + std::to_string(i));
            E.a.push_back(a);
            Vertex prev = a;
            if (vc || ds) {
                Vertex c = bld.add_vertex(ep + "c" + std::to_string(i));
                bld.add_edge(prev, c);
                E.c.push_back(c);
                prev = c;
            }
            if (ds) {
                Vertex cp = bld.add_vertex(ep + "c'" + std::to_string(i));
                bld.add_edge(prev, cp);
                E.cp.push_back(cp);
                prev = cp;
            }
            Vertex b = bld.add_vertex(ep + "b" + std::to_string(i));
            bld.add_edge(prev, b);
            E.b.push_back(b);
        }
        E.a_plus = bld.add_vertex(ep + "a+");
        Vertex prev = E.a_plus;
        if (ds) {
            E.c_plus = bld.add_vertex(ep + "c+");
            bld.add_edge(prev, E.c_plus);
            prev = E.c_plus;
        }
        E.b_plus = bld.add_vertex(ep + "b+");
        bld.add_edge(prev, E.b_plus);
        E.eu = bld.add_vertex(ep + "eu");
        E.ev = bld.add_vertex(ep + "ev");
        bld.add_edge(E.b_plus, E.eu);
        bld.add_edge(E.b_plus, E.ev);
        bld.add_edge(E.eu, E.ev);
    }

    // Host-vertex components, including the pending pairs of their sides.
    for (Vertex hv = 0; hv < n; ++hv) {
        VertexSlot& V = layout.verts[static_cast<size_t>(hv)];
        const std::string vp = P + "v" + std::to_string(hv) + ".";
        V.w = bld.add_vertex(vp + "w");
        for (int j = 1; j <= r + 1; ++j) {
            const bool split = ds || (vc && j <= r);
            if (split) {
                Vertex cx = bld.add_vertex(vp + "cx" + std::to_string(j));
                bld.add_edge(V.w, cx);
                Vertex x = bld.add_vertex(vp + "x" + std::to_string(j));
                bld.add_edge(cx, x);
                V.cx.push_back(cx);
                V.x.push_back(x);
            } else {
                Vertex x = bld.add_vertex(vp + "x" + std::to_string(j));
                bld.add_edge(V.w, x);
                V.x.push_back(x);
            }
        }
        for (const EdgeId& he : host.incident_edges(hv)) {
            const int t = *host.edge_index(he);
            const int sideIdx = (hv == he.u) ? 0 : 1;
            SideSlot& S = layout.sides[static_cast<size_t>(t)][static_cast<size_t>(sideIdx)];
            const char sideChar = (sideIdx == 0) ? 'u' : 'v';
            const std::string ep = P + "e" + std::to_string(t) + ".";
            const Vertex sel = (sideIdx == 0) ? layout.edges[static_cast<size_t>(t)].eu
                                              : layout.edges[static_cast<size_t>(t)].ev;
            for (int i = 1; i <= mmo.sigma[static_cast<size_t>(t)]; ++i) {
                const std::string suff = std::string(1, sideChar) + std::to_string(i);
                Vertex before_y = V.w;
                if (ds) {
                    Vertex cy = bld.add_vertex(ep + "cy" + suff);
                    bld.add_edge(V.w, cy);
                    S.cy.push_back(cy);
                    before_y = cy;
                }
                Vertex y = bld.add_vertex(ep + "y" + suff);
                bld.add_edge(before_y, y);
                S.y.push_back(y);
                Vertex z = bld.add_vertex(ep + "z" + suff);
                bld.add_edge(y, z);
                S.z.push_back(z);
                if (ds) {
                    Vertex cpy = bld.add_vertex(ep + "c'y" + suff);
                    bld.add_edge(y, cpy);
                    bld.add_edge(cpy, sel);
                    S.cpy.push_back(cpy);
                } else {
                    bld.add_edge(sel, y);
                }
            }
        }
    }

    // Token pairs to pending pairs: b[i] reaches the i-th leaf of each side.
    for (int t = 0; t < m; ++t) {
        for (size_t i = 0; i < layout.edges[static_cast<size_t>(t)].b.size(); ++i) {
            bld.add_edge(layout.edges[static_cast<size_t>(t)].b[i],
                         layout.sides[static_cast<size_t>(t)][0].z[i]);
            bld.add_edge(layout.edges[static_cast<size_t>(t)].b[i],
                         layout.sides[static_cast<size_t>(t)][1].z[i]);
        }
    }

    if (opts.with_supplier) {
        const std::int64_t donors = donor_count(mmo);
        if (donors < 0) {
            throw BuilderPreconditionError(
                "donor capacity r*n = " + std::to_string(static_cast<std::int64_t>(r) * n) +
                " is below the total weight " + std::to_string(mmo.sigma_total()) +
                "; the source instance is a trivial no");
        }
        SupplierSlot S;
        S.s = bld.add_vertex(P + "s");
        for (std::int64_t i = 1; i <= donors; ++i) {
            DonorSlot D;
            const std::string dp = P + "s.d" + std::to_string(i) + ".";
            D.d[0] = bld.add_vertex(dp + "1");
            bld.add_edge(S.s, D.d[0]);
            if (ds) {
                D.mid[0] = bld.add_vertex(dp + "1+");
                bld.add_edge(D.d[0], D.mid[0]);
                D.mid[1] = bld.add_vertex(dp + "2-");
                bld.add_edge(D.mid[0], D.mid[1]);
                D.d[1] = bld.add_vertex(dp + "2");
                bld.add_edge(D.mid[1], D.d[1]);
                D.mid[2] = bld.add_vertex(dp + "2+");
                bld.add_edge(D.d[1], D.mid[2]);
                D.mid[3] = bld.add_vertex(dp + "3-");
                bld.add_edge(D.mid[2], D.mid[3]);
                D.d[2] = bld.add_vertex(dp + "3");
                bld.add_edge(D.mid[3], D.d[2]);
            } else {
                D.d[1] = bld.add_vertex(dp + "2");
                bld.add_edge(D.d[0], D.d[1]);
                D.d[2] = bld.add_vertex(dp + "3");
                bld.add_edge(D.d[1], D.d[2]);
            }
            S.donors.push_back(D);
        }
        S.pendant = bld.add_vertex(P + "s.p");
        bld.add_edge(S.s, S.pendant);
        // The source feeds every non-spare spoke.
        for (Vertex hv = 0; hv < n; ++hv) {
            for (int j = 0; j < r; ++j) {
                bld.add_edge(S.s, layout.verts[static_cast<size_t>(hv)].x[static_cast<size_t>(j)]);
            }
        }
        layout.supplier = S;
    }

    if (opts.with_dominator) {
        DominatorSlot D;
        D.d = bld.add_vertex(P + "dom");
        D.dprime = bld.add_vertex(P + "dom'");
        bld.add_edge(D.d, D.dprime);
        for (int t = 0; t < m; ++t) {
            for (int sideIdx = 0; sideIdx < 2; ++sideIdx) {
                for (Vertex cy : layout.sides[static_cast<size_t>(t)][static_cast<size_t>(sideIdx)].cy) {
                    bld.add_edge(D.d, cy);
                }
            }
        }
        layout.dominator = D;
    }

    return layout;
}

void gh_schedule(std::vector<std::vector<Vertex>>& bags, const MMOInstance& mmo,
                 const GHLayout& layout, const std::vector<Vertex>& base) {
    const Graph& host = mmo.host;
    const bool vc = layout.flavor == GHFlavor::SubdividedVC;
    const bool ds = layout.flavor == GHFlavor::SubdividedDS;

    std::vector<Vertex> acc = base;  // contained in every remaining bag of this copy

    if (layout.supplier) {
        const Vertex s = layout.supplier->s;
        for (const DonorSlot& D : layout.supplier->donors) {
            std::vector<Vertex> chain;
            if (ds) {
                chain = {D.d[0], D.mid[0], D.mid[1], D.d[1], D.mid[2], D.mid[3], D.d[2]};
            } else {
                chain = {D.d[0], D.d[1], D.d[2]};
            }
            for (size_t i = 0; i + 1 < chain.size(); ++i) {
                std::vector<Vertex> bag = base;
                bag.push_back(s);
                bag.push_back(chain[i]);
                bag.push_back(chain[i + 1]);
                bags.push_back(std::move(bag));
            }
        }
        std::vector<Vertex> bag = base;
        bag.push_back(s);
        bag.push_back(layout.supplier->pendant);
        bags.push_back(std::move(bag));
        acc.push_back(s);
    }

    if (layout.dominator) {
        std::vector<Vertex> bag = acc;
        bag.push_back(layout.dominator->d);
        bag.push_back(layout.dominator->dprime);
        bags.push_back(std::move(bag));
        acc.push_back(layout.dominator->d);
    }

    std::set<Vertex> cur;  // host vertices currently held
    auto emit = [&](const std::vector<Vertex>& extra) {
        std::vector<Vertex> bag = acc;
        for (Vertex hv : cur) bag.push_back(layout.verts[static_cast<size_t>(hv)].w);
        bag.insert(bag.end(), extra.begin(), extra.end());
        bags.push_back(std::move(bag));
    };

    const PathDecomposition nice = make_nice(mmo.pd, host);
    for (size_t step = 0; step + 1 < nice.bags.size(); ++step) {
        const auto& before = nice.bags[step];
        const auto& after = nice.bags[step + 1];
        if (after.size() < before.size()) {
            // A host vertex is forgotten.
            for (Vertex hv : before) {
                if (!std::binary_search(after.begin(), after.end(), hv)) cur.erase(hv);
            }
            continue;
        }
        Vertex intro = -1;
        for (Vertex hv : after) {
            if (!std::binary_search(before.begin(), before.end(), hv)) intro = hv;
        }
        cur.insert(intro);

        // Spoke bags of the arriving host vertex.
        const VertexSlot& V = layout.verts[static_cast<size_t>(intro)];
        for (size_t j = 0; j < V.x.size(); ++j) {
            std::vector<Vertex> extra;
            if (j < V.cx.size()) extra.push_back(V.cx[j]);
            extra.push_back(V.x[j]);
            emit(extra);
        }

        // Components of the host edges whose second endpoint just arrived.
        for (const EdgeId& he : host.incident_edges(intro)) {
            const Vertex other = he.other(intro);
            if (other == intro || !cur.count(other)) continue;
            const int t = *host.edge_index(he);
            const EdgeSlot& E = layout.edges[static_cast<size_t>(t)];
            const SideSlot& SU = layout.sides[static_cast<size_t>(t)][0];
            const SideSlot& SV = layout.sides[static_cast<size_t>(t)][1];
            if (ds) {
                emit({E.eu, E.ev, E.b_plus, E.c_plus});
                emit({E.eu, E.ev, E.c_plus, E.a_plus});
            } else {
                emit({E.eu, E.ev, E.a_plus, E.b_plus});
            }
            for (size_t i = 0; i < E.a.size(); ++i) {
                if (ds) {
                    emit({E.eu, E.ev, E.a[i], E.c[i]});
                    emit({E.eu, E.ev, E.c[i], E.cp[i], E.b[i]});
                    emit({E.eu, E.ev, E.b[i], SU.z[i], SU.y[i]});
                    emit({E.eu, E.ev, E.b[i], SU.y[i], SU.cy[i]});
                    emit({E.eu, E.ev, E.b[i], SU.y[i], SU.cpy[i]});
                    emit({E.eu, E.ev, E.b[i], SV.z[i], SV.y[i]});
                    emit({E.eu, E.ev, E.b[i], SV.y[i], SV.cy[i]});
                    emit({E.eu, E.ev, E.b[i], SV.y[i], SV.cpy[i]});
                } else if (vc) {
                    emit({E.eu, E.ev, E.a[i], E.c[i]});
                    emit({E.eu, E.ev, E.c[i], E.b[i]});
                    emit({E.eu, E.ev, E.b[i], SU.z[i], SU.y[i]});
                    emit({E.eu, E.ev, E.b[i], SV.z[i], SV.y[i]});
                } else {
                    emit({E.eu, E.ev, E.a[i], E.b[i], SU.z[i], SU.y[i]});
                    emit({E.eu, E.ev, E.b[i], SV.z[i], SV.y[i]});
                }
            }
        }
    }
}

void finish_bags(std::vector<std::vector<Vertex>>& bags) {
    for (auto& bag : bags) std::sort(bag.begin(), bag.end());
    bags.erase(std::unique(bags.begin(), bags.end()), bags.end());
}

}  // namespace detail

LabeledConstruction build_edge_gadget(int sigma_e) {
    if (sigma_e < 1) {
        throw BuilderPreconditionError("edge component needs weight >= 1, got " +
                                       std::to_string(sigma_e));
    }
    GraphBuilder bld;
    std::vector<Vertex> as, bs;
    for (int i = 1; i <= sigma_e; ++i) {
        Vertex a = bld.add_vertex("a" + std::to_string(i));
        Vertex b = bld.add_vertex("b" + std::to_string(i));
        bld.add_edge(a, b);
        as.push_back(a);
        bs.push_back(b);
    }
    Vertex ap = bld.add_vertex("a+");
    Vertex bp = bld.add_vertex("b+");
    bld.add_edge(ap, bp);
    Vertex eu = bld.add_vertex("eu");
    Vertex ev = bld.add_vertex("ev");
    bld.add_edge(bp, eu);
    bld.add_edge(bp, ev);
    bld.add_edge(eu, ev);

    PathDecomposition pd;
    for (int i = 0; i < sigma_e; ++i) {
        pd.bags.push_back({as[static_cast<size_t>(i)], bs[static_cast<size_t>(i)]});
    }
    pd.bags.push_back({ap, bp, eu, ev});

    LabeledConstruction out{bld.build(),
                            bld.names(),
                            std::move(pd),
                            std::nullopt,
                            Provenance{"build_edge_gadget",
                                       "",
                                       3,
                                       {"weight = " + std::to_string(sigma_e)}}};
    out.validate();
    return out;
}

LabeledConstruction build_vertex_gadget(int r, const std::vector<int>& incident_sigma) {
    if (r < 1) {
        throw BuilderPreconditionError("vertex component needs bound >= 1, got " +
                                       std::to_string(r));
    }
    for (int se : incident_sigma) {
        if (se < 1) {
            throw BuilderPreconditionError("incident weights must be positive, got " +
                                           std::to_string(se));
        }
    }
    GraphBuilder bld;
    Vertex w = bld.add_vertex("w");
    std::vector<Vertex> xs;
    for (int j = 1; j <= r + 1; ++j) {
        Vertex x = bld.add_vertex("x" + std::to_string(j));
        bld.add_edge(w, x);
        xs.push_back(x);
    }
    PathDecomposition pd;
    for (Vertex x : xs) pd.bags.push_back({w, x});
    for (size_t t = 0; t < incident_sigma.size(); ++t) {
        for (int i = 1; i <= incident_sigma[t]; ++i) {
            const std::string suff = std::to_string(t + 1) + "." + std::to_string(i);
            Vertex y = bld.add_vertex("y" + suff);
            bld.add_edge(w, y);
            Vertex z = bld.add_vertex("z" + suff);
            bld.add_edge(y, z);
            pd.bags.push_back({w, y, z});
        }
    }

    std::int64_t total = 0;
    for (int se : incident_sigma) total += se;
    LabeledConstruction out{bld.build(),
                            bld.names(),
                            std::move(pd),
                            std::nullopt,
                            Provenance{"build_vertex_gadget",
                                       "",
                                       2,
                                       {"bound = " + std::to_string(r),
                                        "incident weight = " + std::to_string(total)}}};
    out.validate();
    return out;
}

LabeledConstruction build_GH(const MMOInstance& mmo) {
    mmo.validate();
    if (mmo.n() == 0) throw BuilderPreconditionError("host has no vertices");

    GraphBuilder bld;
    detail::GHLayout layout = detail::emit_gh(bld, mmo, detail::GHOptions{});
    std::vector<std::vector<Vertex>> bags;
    detail::gh_schedule(bags, mmo, layout, {});
    detail::finish_bags(bags);

    const int claimed = width(mmo.pd) + 6;
    LabeledConstruction out{
        bld.build(),
        bld.names(),
        PathDecomposition{std::move(bags)},
        std::nullopt,
        Provenance{"build_GH",
                   "",
                   claimed,
                   {"host: n = " + std::to_string(mmo.n()) + ", m = " + std::to_string(mmo.m()) +
                    ", total weight = " + std::to_string(mmo.sigma_total()) +
                    ", bound = " + std::to_string(mmo.r)}}};
    out.validate();
    return out;
}

LabeledConstruction attach_supplier(const LabeledConstruction& gh, const MMOInstance& mmo) {
    mmo.validate();
    if (mmo.n() == 0) throw BuilderPreconditionError("host has no vertices");
    const std::int64_t donors = detail::donor_count(mmo);
    if (donors < 0) {
        throw BuilderPreconditionError(
            "donor capacity r*n = " + std::to_string(static_cast<std::int64_t>(mmo.r) * mmo.n()) +
            " is below the total weight " + std::to_string(mmo.sigma_total()) +
            "; the source instance is a trivial no");
    }
    const std::int64_t expected =
        6 * mmo.sigma_total() + 4 * mmo.m() + static_cast<std::int64_t>(mmo.n()) * (mmo.r + 2);
    if (gh.graph.num_vertices() != expected) {
        throw std::invalid_argument("member graph has " + std::to_string(gh.graph.num_vertices()) +
                                    " vertices where the instance calls for " +
                                    std::to_string(expected));
    }
    if (!gh.pd) throw std::invalid_argument("member construction carries no decomposition");
    for (const std::string& name : gh.names) {
        if (name == "s") throw std::invalid_argument("member already carries a supplier");
    }

    std::vector<EdgeId> edges = gh.graph.edges();
    std::vector<std::string> names = gh.names;
    std::vector<std::vector<Vertex>> bags;
    Vertex next = gh.graph.num_vertices();

    const Vertex s = next++;
    names.push_back("s");
    for (std::int64_t i = 1; i <= donors; ++i) {
        const std::string dp = "s.d" + std::to_string(i) + ".";
        Vertex d1 = next++;
        names.push_back(dp + "1");
        Vertex d2 = next++;
        names.push_back(dp + "2");
        Vertex d3 = next++;
        names.push_back(dp + "3");
        edges.emplace_back(s, d1);
        edges.emplace_back(d1, d2);
        edges.emplace_back(d2, d3);
        bags.push_back({s, d1, d2});
        bags.push_back({s, d2, d3});
    }
    const Vertex pendant = next++;
    names.push_back("s.p");
    edges.emplace_back(s, pendant);
    bags.push_back({s, pendant});

    for (std::vector<Vertex> bag : gh.pd->bags) {
        bag.push_back(s);
        std::sort(bag.begin(), bag.end());
        bags.push_back(std::move(bag));
    }

    const int claimed = width(mmo.pd) + 7;
    LabeledConstruction out{
        Graph(next, std::move(edges)),
        std::move(names),
        PathDecomposition{std::move(bags)},
        std::nullopt,
        Provenance{"attach_supplier",
                   "",
                   claimed,
                   {"donor chains = " + std::to_string(donors)}}};
    out.validate();
    return out;
}

LabeledConstruction build_selector(int t, int m, std::int64_t sigma_total) {
    if (t < 1 || m < 1 || sigma_total < 1) {
        throw BuilderPreconditionError("selection component needs t, m, total weight >= 1");
    }
    GraphBuilder bld;
    PathDecomposition pd;
    for (int j = 1; j <= t; ++j) {
        Vertex sel = bld.add_vertex("sel" + std::to_string(j));
        Vertex unsel = bld.add_vertex("unsel" + std::to_string(j));
        bld.add_edge(sel, unsel);
        pd.bags.push_back({sel, unsel});
    }
    Vertex h = bld.add_vertex("h");
    for (std::int64_t i = 1; i <= sigma_total; ++i) {
        Vertex f = bld.add_vertex("f" + std::to_string(i));
        Vertex g = bld.add_vertex("g" + std::to_string(i));
        bld.add_edge(f, g);
        bld.add_edge(h, f);
        pd.bags.push_back({h, f, g});
    }
    Vertex q = bld.add_vertex("q");
    for (int i = 1; i <= m; ++i) {
        Vertex o = bld.add_vertex("o" + std::to_string(i));
        Vertex p = bld.add_vertex("p" + std::to_string(i));
        bld.add_edge(o, p);
        bld.add_edge(q, o);
        pd.bags.push_back({q, o, p});
    }

    LabeledConstruction out{bld.build(),
                            bld.names(),
                            std::move(pd),
                            std::nullopt,
                            Provenance{"build_selector",
                                       "",
                                       2,
                                       {"members = " + std::to_string(t) +
                                        ", edges = " + std::to_string(m) +
                                        ", total weight = " + std::to_string(sigma_total)}}};
    out.validate();
    return out;
}

}  // namespace disco
