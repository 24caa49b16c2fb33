#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "construction_internal.hpp"
#include "discokit/errors.hpp"

namespace disco::detail {
namespace {

void check_host(const MMOInstance& mmo) {
    mmo.validate();
    if (mmo.host.num_vertices() == 0) {
        throw BuilderPreconditionError("host graph has no vertices");
    }
}

void check_members(const std::vector<MMOInstance>& members) {
    if (members.empty()) throw BuilderPreconditionError("member list is empty");
    for (size_t j = 0; j < members.size(); ++j) {
        members[j].validate();
        if (members[j].host.num_vertices() == 0) {
            throw BuilderPreconditionError("member " + std::to_string(j) +
                                           " has no host vertices");
        }
        if (auto why = shape_mismatch(members[0], members[j])) {
            throw BuilderPreconditionError("member " + std::to_string(j) + " " + *why);
        }
    }
    if (members[0].m() < 1) {
        throw BuilderPreconditionError("members need at least one host edge");
    }
}

void append(std::vector<Vertex>& out, const std::vector<Vertex>& vs) {
    out.insert(out.end(), vs.begin(), vs.end());
}

}  // namespace

SelectorIds emit_selector(GraphBuilder& bld, int t, int m, std::int64_t sigma_total,
                          std::int64_t pendants) {
    SelectorIds ids;
    for (int j = 1; j <= t; ++j) {
        Vertex sel = bld.add_vertex("sel" + std::to_string(j));
        Vertex unsel = bld.add_vertex("unsel" + std::to_string(j));
        bld.add_edge(sel, unsel);
        ids.sel.push_back(sel);
        ids.unsel.push_back(unsel);
    }
    ids.h = bld.add_vertex("h");
    for (std::int64_t i = 1; i <= sigma_total; ++i) {
        Vertex f = bld.add_vertex("f" + std::to_string(i));
        Vertex g = bld.add_vertex("g" + std::to_string(i));
        bld.add_edge(f, g);
        bld.add_edge(ids.h, f);
        ids.f.push_back(f);
        ids.g.push_back(g);
    }
    ids.q = bld.add_vertex("q");
    for (int i = 1; i <= m; ++i) {
        Vertex o = bld.add_vertex("o" + std::to_string(i));
        Vertex p = bld.add_vertex("p" + std::to_string(i));
        bld.add_edge(o, p);
        bld.add_edge(ids.q, o);
        ids.o.push_back(o);
        ids.p.push_back(p);
    }
    for (std::int64_t i = 1; i <= pendants; ++i) {
        Vertex v = bld.add_vertex("h.p" + std::to_string(i));
        bld.add_edge(ids.h, v);
        ids.h_pend.push_back(v);
    }
    for (std::int64_t i = 1; i <= pendants; ++i) {
        Vertex v = bld.add_vertex("q.p" + std::to_string(i));
        bld.add_edge(ids.q, v);
        ids.q_pend.push_back(v);
    }
    return ids;
}

GHLayout emit_reduction(GraphBuilder& bld, const MMOInstance& mmo, Problem kind) {
    check_host(mmo);
    GHOptions opts;
    switch (kind) {
        case Problem::IS:
            break;
        case Problem::VC:
            opts.flavor = GHFlavor::SubdividedVC;
            opts.with_supplier = true;
            break;
        case Problem::DS:
            opts.flavor = GHFlavor::SubdividedDS;
            opts.with_supplier = true;
            opts.with_dominator = true;
            break;
        default:
            throw std::invalid_argument("no single-host builder targets " + to_string(kind));
    }
    return emit_gh(bld, mmo, opts);
}

BatchParts emit_batch(GraphBuilder& bld, const std::vector<MMOInstance>& members, Problem kind) {
    if (kind != Problem::VC && kind != Problem::IS && kind != Problem::DS) {
        throw std::invalid_argument("no batch builder targets " + to_string(kind));
    }
    check_members(members);
    const MMOInstance& shape = members[0];
    const int t = static_cast<int>(members.size());

    BatchParts parts;
    for (int j = 0; j < t; ++j) {
        GHOptions opts;
        if (kind == Problem::VC) opts.flavor = GHFlavor::SubdividedVC;
        if (kind == Problem::DS) {
            opts.flavor = GHFlavor::SubdividedDS;
            opts.with_dominator = true;
        }
        opts.prefix = "m" + std::to_string(j + 1) + ".";
        parts.copies.push_back(emit_gh(bld, members[static_cast<size_t>(j)], opts));
    }
    const std::int64_t pendants =
        kind == Problem::VC ? 2 * shape.m() + 5 * shape.sigma_total() + 2 : 0;
    parts.selector = emit_selector(bld, t, shape.m(), shape.sigma_total(), pendants);
    SelectorIds& sel = parts.selector;

    if (kind == Problem::IS) {
        // Keeper-to-copy wiring: each keeper reaches every untokened copy
        // vertex; the weights hub reaches every token pair's first vertex
        // and the orientations quay every spare pair's first vertex.
        for (int j = 0; j < t; ++j) {
            const GHLayout& L = parts.copies[static_cast<size_t>(j)];
            std::vector<Vertex> others;
            for (const EdgeSlot& E : L.edges) {
                append(others, E.a);
                others.push_back(E.a_plus);
                others.push_back(E.eu);
                others.push_back(E.ev);
            }
            for (const auto& sides : L.sides) {
                append(others, sides[0].z);
                append(others, sides[1].z);
            }
            for (const VertexSlot& V : L.verts) {
                others.push_back(V.w);
                for (size_t i = 0; i + 1 < V.x.size(); ++i) others.push_back(V.x[i]);
            }
            std::sort(others.begin(), others.end());
            for (Vertex v : others) bld.add_edge(sel.unsel[static_cast<size_t>(j)], v);
            for (const EdgeSlot& E : L.edges) {
                for (Vertex a : E.a) bld.add_edge(sel.h, a);
                bld.add_edge(sel.q, E.a_plus);
            }
        }
    } else if (kind == Problem::VC) {
        // Picker-to-copy wiring: each picker reaches every tokened copy
        // vertex; the weights hub reaches the non-spare spokes and the
        // orientations quay the selection vertices.
        for (int j = 0; j < t; ++j) {
            const GHLayout& L = parts.copies[static_cast<size_t>(j)];
            std::vector<Vertex> tokened;
            for (const EdgeSlot& E : L.edges) {
                append(tokened, E.c);
                append(tokened, E.b);
                tokened.push_back(E.b_plus);
                tokened.push_back(E.eu);
                tokened.push_back(E.ev);
            }
            for (const auto& sides : L.sides) {
                append(tokened, sides[0].y);
                append(tokened, sides[1].y);
            }
            for (const VertexSlot& V : L.verts) {
                tokened.push_back(V.w);
                for (size_t i = 0; i + 1 < V.x.size(); ++i) tokened.push_back(V.x[i]);
            }
            std::sort(tokened.begin(), tokened.end());
            for (Vertex v : tokened) bld.add_edge(sel.sel[static_cast<size_t>(j)], v);
            for (const VertexSlot& V : L.verts) {
                for (size_t i = 0; i + 1 < V.x.size(); ++i) bld.add_edge(sel.h, V.x[i]);
            }
            for (const EdgeSlot& E : L.edges) {
                bld.add_edge(sel.q, E.eu);
                bld.add_edge(sel.q, E.ev);
            }
        }
    } else {
        // Picker-to-copy wiring through midpoints: each picker reaches every
        // tokened copy vertex via a fresh midpoint "via.<target>"; the
        // weights hub reaches the non-spare spokes and the orientations quay
        // the selection vertices, both directly.
        parts.mid_of.resize(static_cast<size_t>(t));
        for (int j = 0; j < t; ++j) {
            const GHLayout& L = parts.copies[static_cast<size_t>(j)];
            std::vector<Vertex> tokened;
            for (const EdgeSlot& E : L.edges) {
                append(tokened, E.c);
                append(tokened, E.b);
                tokened.push_back(E.a_plus);
                tokened.push_back(E.eu);
                tokened.push_back(E.ev);
            }
            for (const auto& sides : L.sides) {
                append(tokened, sides[0].y);
                append(tokened, sides[1].y);
            }
            for (const VertexSlot& V : L.verts) {
                for (size_t i = 0; i + 1 < V.x.size(); ++i) tokened.push_back(V.x[i]);
                tokened.push_back(V.cx.back());
            }
            tokened.push_back(L.dominator->d);
            std::sort(tokened.begin(), tokened.end());
            for (Vertex v : tokened) {
                Vertex mid = bld.add_vertex("via." + bld.name_of(v));
                bld.add_edge(sel.sel[static_cast<size_t>(j)], mid);
                bld.add_edge(mid, v);
                parts.mid_of[static_cast<size_t>(j)][v] = mid;
            }
            for (const VertexSlot& V : L.verts) {
                for (size_t i = 0; i + 1 < V.x.size(); ++i) bld.add_edge(sel.h, V.x[i]);
            }
            for (const EdgeSlot& E : L.edges) {
                bld.add_edge(sel.q, E.eu);
                bld.add_edge(sel.q, E.ev);
            }
        }
    }
    return parts;
}

}  // namespace disco::detail
