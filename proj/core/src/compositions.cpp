#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "construction_internal.hpp"
#include "discokit/constructions.hpp"
#include "discokit/errors.hpp"

namespace disco {
namespace {

int max_member_width(const std::vector<MMOInstance>& members) {
    int best = 0;
    for (const MMOInstance& mmo : members) best = std::max(best, width(mmo.pd));
    return best;
}

std::string batch_note(const std::vector<MMOInstance>& members) {
    const MMOInstance& first = members[0];
    return "members = " + std::to_string(members.size()) + ", shape: n = " +
           std::to_string(first.n()) + ", m = " + std::to_string(first.m()) +
           ", total weight = " + std::to_string(first.sigma_total()) +
           ", bound = " + std::to_string(first.r);
}

void append(std::vector<Vertex>& out, const std::vector<Vertex>& vs) {
    out.insert(out.end(), vs.begin(), vs.end());
}

// Selector-owned bags: pendant bags, then refill-pair bags, all holding the
// hubs so that the hubs stay in every bag of the decomposition.
void selector_bags(std::vector<std::vector<Vertex>>& bags, const detail::SelectorIds& ids) {
    for (Vertex v : ids.h_pend) bags.push_back({ids.h, ids.q, v});
    for (Vertex v : ids.q_pend) bags.push_back({ids.h, ids.q, v});
    for (size_t i = 0; i < ids.f.size(); ++i) {
        bags.push_back({ids.h, ids.q, ids.f[i], ids.g[i]});
    }
    for (size_t i = 0; i < ids.o.size(); ++i) {
        bags.push_back({ids.h, ids.q, ids.o[i], ids.p[i]});
    }
}

LabeledConstruction assemble(GraphBuilder& bld, std::vector<std::vector<Vertex>> bags,
                             Problem problem, std::vector<Vertex> start, std::int64_t budget,
                             Provenance provenance) {
    Graph graph = bld.build();
    DiscoveryInstance inst{problem, graph, TokenConfiguration::of_vertices(std::move(start)),
                           budget, std::nullopt};
    LabeledConstruction out{std::move(graph), bld.names(), PathDecomposition{std::move(bags)},
                            std::move(inst), std::move(provenance)};
    out.validate();
    return out;
}

}  // namespace

LabeledConstruction compose_isd(const std::vector<MMOInstance>& members) {
    GraphBuilder bld;
    detail::BatchParts parts = detail::emit_batch(bld, members, Problem::IS);
    const detail::SelectorIds& sel = parts.selector;
    const MMOInstance& shape = members[0];
    const int t = static_cast<int>(members.size());

    std::vector<std::vector<Vertex>> bags;
    selector_bags(bags, sel);
    for (int j = 0; j < t; ++j) {
        bags.push_back({sel.h, sel.q, sel.sel[static_cast<size_t>(j)],
                        sel.unsel[static_cast<size_t>(j)]});
        detail::gh_schedule(bags, members[static_cast<size_t>(j)],
                            parts.copies[static_cast<size_t>(j)],
                            {sel.h, sel.q, sel.unsel[static_cast<size_t>(j)]});
    }
    detail::finish_bags(bags);

    std::vector<Vertex> start;
    for (const detail::GHLayout& L : parts.copies) {
        for (const detail::EdgeSlot& E : L.edges) {
            append(start, E.b);
            start.push_back(E.b_plus);
        }
        for (const auto& sides : L.sides) {
            append(start, sides[0].y);
            append(start, sides[1].y);
        }
        for (const detail::VertexSlot& V : L.verts) start.push_back(V.x.back());
    }
    append(start, sel.unsel);
    append(start, sel.f);
    append(start, sel.g);
    append(start, sel.o);
    append(start, sel.p);
    start.push_back(sel.h);
    start.push_back(sel.q);

    const std::int64_t budget = 3 * shape.m() + 5 * shape.sigma_total() + 1;
    return assemble(bld, std::move(bags), Problem::IS, std::move(start), budget,
                    Provenance{"compose_isd",
                               "3*m + 5*sigma_total + 1 = " + std::to_string(budget),
                               max_member_width(members) + 10,
                               {batch_note(members)}});
}

LabeledConstruction compose_vcd(const std::vector<MMOInstance>& members) {
    GraphBuilder bld;
    detail::BatchParts parts = detail::emit_batch(bld, members, Problem::VC);
    const detail::SelectorIds& sel = parts.selector;
    const MMOInstance& shape = members[0];
    const int t = static_cast<int>(members.size());
    const std::int64_t budget = 2 * shape.m() + 5 * shape.sigma_total() + 1;

    std::vector<std::vector<Vertex>> bags;
    selector_bags(bags, sel);
    for (int j = 0; j < t; ++j) {
        bags.push_back({sel.h, sel.q, sel.sel[static_cast<size_t>(j)],
                        sel.unsel[static_cast<size_t>(j)]});
        detail::gh_schedule(bags, members[static_cast<size_t>(j)],
                            parts.copies[static_cast<size_t>(j)],
                            {sel.h, sel.q, sel.sel[static_cast<size_t>(j)]});
    }
    detail::finish_bags(bags);

    std::vector<Vertex> start;
    for (const detail::GHLayout& L : parts.copies) {
        for (const detail::EdgeSlot& E : L.edges) {
            append(start, E.c);
            append(start, E.b);
            start.push_back(E.b_plus);
            start.push_back(E.eu);
            start.push_back(E.ev);
        }
        for (const auto& sides : L.sides) {
            append(start, sides[0].y);
            append(start, sides[1].y);
        }
        for (const detail::VertexSlot& V : L.verts) {
            start.push_back(V.w);
            for (size_t i = 0; i + 1 < V.x.size(); ++i) start.push_back(V.x[i]);
        }
    }
    append(start, sel.unsel);
    start.push_back(sel.h);
    start.push_back(sel.q);

    return assemble(bld, std::move(bags), Problem::VC, std::move(start), budget,
                    Provenance{"compose_vcd",
                               "2*m + 5*sigma_total + 1 = " + std::to_string(budget),
                               max_member_width(members) + 10,
                               {batch_note(members),
                                "hub pendants = " + std::to_string(budget + 1) + " each"}});
}

LabeledConstruction compose_dsd(const std::vector<MMOInstance>& members) {
    GraphBuilder bld;
    detail::BatchParts parts = detail::emit_batch(bld, members, Problem::DS);
    const detail::SelectorIds& sel = parts.selector;
    const MMOInstance& shape = members[0];
    const int t = static_cast<int>(members.size());

    std::vector<std::vector<Vertex>> bags;
    selector_bags(bags, sel);
    for (int j = 0; j < t; ++j) {
        bags.push_back({sel.h, sel.q, sel.sel[static_cast<size_t>(j)],
                        sel.unsel[static_cast<size_t>(j)]});
        std::vector<std::vector<Vertex>> copy_bags;
        detail::gh_schedule(copy_bags, members[static_cast<size_t>(j)],
                            parts.copies[static_cast<size_t>(j)],
                            {sel.h, sel.q, sel.sel[static_cast<size_t>(j)]});
        // Each midpoint joins the first bag holding its copy-side endpoint.
        const std::map<Vertex, Vertex>& mids = parts.mid_of[static_cast<size_t>(j)];
        std::set<Vertex> placed;
        for (std::vector<Vertex>& bag : copy_bags) {
            const size_t original = bag.size();
            for (size_t i = 0; i < original; ++i) {
                auto it = mids.find(bag[i]);
                if (it != mids.end() && placed.insert(bag[i]).second) {
                    bag.push_back(it->second);
                }
            }
        }
        for (std::vector<Vertex>& bag : copy_bags) bags.push_back(std::move(bag));
    }
    detail::finish_bags(bags);

    std::vector<Vertex> start;
    for (const detail::GHLayout& L : parts.copies) {
        for (const detail::EdgeSlot& E : L.edges) {
            append(start, E.c);
            append(start, E.b);
            start.push_back(E.a_plus);
            start.push_back(E.eu);
            start.push_back(E.ev);
        }
        for (const auto& sides : L.sides) {
            append(start, sides[0].y);
            append(start, sides[1].y);
        }
        for (const detail::VertexSlot& V : L.verts) {
            for (size_t i = 0; i + 1 < V.x.size(); ++i) start.push_back(V.x[i]);
            start.push_back(V.cx.back());
        }
        start.push_back(L.dominator->d);
    }
    append(start, sel.unsel);

    const std::int64_t budget = 2 * shape.m() + 6 * shape.sigma_total() + 1;
    return assemble(bld, std::move(bags), Problem::DS, std::move(start), budget,
                    Provenance{"compose_dsd",
                               "2*m + 6*sigma_total + 1 = " + std::to_string(budget),
                               max_member_width(members) + 12,
                               {batch_note(members)}});
}

}  // namespace disco
