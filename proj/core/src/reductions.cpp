#include <string>
#include <utility>
#include <vector>

#include "construction_internal.hpp"
#include "discokit/constructions.hpp"
#include "discokit/errors.hpp"

namespace disco {
namespace {

std::string shape_note(const MMOInstance& mmo) {
    return "host: n = " + std::to_string(mmo.n()) + ", m = " + std::to_string(mmo.m()) +
           ", total weight = " + std::to_string(mmo.sigma_total()) +
           ", bound = " + std::to_string(mmo.r);
}

void append(std::vector<Vertex>& out, const std::vector<Vertex>& vs) {
    out.insert(out.end(), vs.begin(), vs.end());
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

LabeledConstruction reduce_vcd(const MMOInstance& mmo) {
    GraphBuilder bld;
    detail::GHLayout L = detail::emit_reduction(bld, mmo, Problem::VC);
    std::vector<std::vector<Vertex>> bags;
    detail::gh_schedule(bags, mmo, L, {});
    detail::finish_bags(bags);

    std::vector<Vertex> start;
    for (const detail::EdgeSlot& E : L.edges) {
        append(start, E.c);
        append(start, E.b);
        start.push_back(E.eu);
        start.push_back(E.ev);
    }
    for (const auto& sides : L.sides) {
        append(start, sides[0].y);
        append(start, sides[1].y);
    }
    for (const detail::VertexSlot& V : L.verts) start.push_back(V.w);
    start.push_back(L.supplier->s);
    for (const detail::DonorSlot& D : L.supplier->donors) {
        start.push_back(D.d[0]);
        start.push_back(D.d[2]);
    }

    const std::int64_t budget = mmo.m() + 3 * static_cast<std::int64_t>(mmo.r) * mmo.n();
    return assemble(bld, std::move(bags), Problem::VC, std::move(start), budget,
                    Provenance{"reduce_vcd",
                               "m + 3*r*n = " + std::to_string(budget),
                               width(mmo.pd) + 7,
                               {shape_note(mmo),
                                "donor chains = " + std::to_string(detail::donor_count(mmo))}});
}

LabeledConstruction reduce_isd(const MMOInstance& mmo) {
    GraphBuilder bld;
    detail::GHLayout L = detail::emit_reduction(bld, mmo, Problem::IS);
    std::vector<std::vector<Vertex>> bags;
    detail::gh_schedule(bags, mmo, L, {});
    detail::finish_bags(bags);

    std::vector<Vertex> start;
    for (const detail::EdgeSlot& E : L.edges) {
        append(start, E.a);
        append(start, E.b);
        start.push_back(E.a_plus);
        start.push_back(E.b_plus);
    }
    for (const auto& sides : L.sides) {
        append(start, sides[0].y);
        append(start, sides[1].y);
    }
    for (const detail::VertexSlot& V : L.verts) start.push_back(V.x.back());

    const std::int64_t budget = mmo.m() + 3 * mmo.sigma_total();
    return assemble(bld, std::move(bags), Problem::IS, std::move(start), budget,
                    Provenance{"reduce_isd",
                               "m + 3*sigma_total = " + std::to_string(budget),
                               width(mmo.pd) + 6,
                               {shape_note(mmo)}});
}

LabeledConstruction reduce_dsd(const MMOInstance& mmo) {
    GraphBuilder bld;
    detail::GHLayout L = detail::emit_reduction(bld, mmo, Problem::DS);
    std::vector<std::vector<Vertex>> bags;
    detail::gh_schedule(bags, mmo, L, {});
    detail::finish_bags(bags);

    std::vector<Vertex> start;
    for (const detail::EdgeSlot& E : L.edges) {
        append(start, E.c);
        append(start, E.b);
        start.push_back(E.eu);
        start.push_back(E.ev);
    }
    for (const auto& sides : L.sides) {
        append(start, sides[0].y);
        append(start, sides[1].y);
    }
    for (const detail::VertexSlot& V : L.verts) start.push_back(V.cx.back());
    start.push_back(L.supplier->s);
    for (const detail::DonorSlot& D : L.supplier->donors) {
        start.push_back(D.d[0]);
        start.push_back(D.d[1]);
        start.push_back(D.d[2]);
    }
    start.push_back(L.dominator->d);

    const std::int64_t budget =
        2 * mmo.m() + 4 * static_cast<std::int64_t>(mmo.r) * mmo.n();
    return assemble(bld, std::move(bags), Problem::DS, std::move(start), budget,
                    Provenance{"reduce_dsd",
                               "2*m + 4*r*n = " + std::to_string(budget),
                               width(mmo.pd) + 9,
                               {shape_note(mmo),
                                "donor chains = " + std::to_string(detail::donor_count(mmo))}});
}

}  // namespace disco
