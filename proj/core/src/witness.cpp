#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "construction_internal.hpp"
#include "cross_internal.hpp"
#include "discokit/errors.hpp"
#include "discokit/witness.hpp"
#include "fvs_internal.hpp"

namespace disco {
namespace {

// Running configuration that records one configuration per slide.
class Replay {
  public:
    explicit Replay(const TokenConfiguration& start)
        : cur_(start.vertices.begin(), start.vertices.end()) {
        seq_.configs.push_back(start);
    }

    void slide(Vertex from, Vertex to) {
        if (cur_.erase(from) == 0) {
            throw std::logic_error("schedule slides from an empty vertex");
        }
        if (!cur_.insert(to).second) {
            throw std::logic_error("schedule slides onto a token");
        }
        seq_.configs.push_back(
            TokenConfiguration::of_vertices(std::vector<Vertex>(cur_.begin(), cur_.end())));
    }

    bool occupied(Vertex v) const { return cur_.count(v) != 0; }

    std::int64_t slides() const { return static_cast<std::int64_t>(seq_.configs.size()) - 1; }

    DiscoverySequence take() { return std::move(seq_); }

  private:
    std::set<Vertex> cur_;
    DiscoverySequence seq_;
};

// Lowest non-spare spoke of the hub with no token on it.
Vertex free_spoke(const Replay& rep, const detail::VertexSlot& V) {
    for (size_t j = 0; j + 1 < V.x.size(); ++j) {
        if (!rep.occupied(V.x[j])) return V.x[j];
    }
    throw std::logic_error("hub has no free spoke");
}

// Lowest non-spare column of the hub whose split vertex is free.
size_t free_split_column(const Replay& rep, const detail::VertexSlot& V) {
    for (size_t j = 0; j + 1 < V.x.size(); ++j) {
        if (!rep.occupied(V.cx[j])) return j;
    }
    throw std::logic_error("hub has no free split column");
}

// Lowest non-spare column over all hubs with both the split vertex and the
// spoke free; returns the spoke. Donor tokens land here.
Vertex free_full_column(const Replay& rep, const std::vector<detail::VertexSlot>& verts) {
    for (const detail::VertexSlot& V : verts) {
        for (size_t j = 0; j + 1 < V.x.size(); ++j) {
            if (!rep.occupied(V.cx[j]) && !rep.occupied(V.x[j])) return V.x[j];
        }
    }
    throw std::logic_error("no fully free spoke column remains");
}

void require_orientation(const MMOInstance& mmo, const Orientation& o) {
    if (o.flip.size() != static_cast<size_t>(mmo.m())) {
        throw std::invalid_argument("orientation length does not match the host edge count");
    }
    if (!orientation_feasible(mmo, o)) {
        throw std::invalid_argument(
            "orientation exceeds the out-weight bound; the schedule is defined only for "
            "feasible orientations");
    }
}

const DiscoveryInstance& require_instance(const LabeledConstruction& c) {
    if (!c.instance) {
        throw std::invalid_argument("construction carries no discovery instance");
    }
    return *c.instance;
}

// Plain-copy schedule: per host edge, drop the pair tokens to the charged
// side's landing pads, forward the pending tokens through the hub onto free
// spokes, and park the spare pair token on the charged side's selection
// vertex.
void replay_plain_core(Replay& rep, const detail::GHLayout& L, const MMOInstance& mmo,
                       const Orientation& o) {
    for (int e = 0; e < mmo.m(); ++e) {
        const Vertex tail = tail_of(mmo, o, e);
        const detail::EdgeSlot& E = L.edges[static_cast<size_t>(e)];
        const detail::SideSlot& S = L.side_at(mmo.host, e, tail);
        const detail::VertexSlot& W = L.verts[static_cast<size_t>(tail)];
        for (size_t i = 0; i < E.b.size(); ++i) rep.slide(E.b[i], S.z[i]);
        for (size_t i = 0; i < S.y.size(); ++i) {
            rep.slide(S.y[i], W.w);
            rep.slide(W.w, free_spoke(rep, W));
        }
        rep.slide(E.b_plus, L.selection_at(mmo.host, e, tail));
    }
}

// Once-split schedule: per host edge, vacate the hub into a free split
// vertex and refill it from the pending pair, drop the pair tokens to the
// charged side, then pull the uncharged selection vertex's token onto the
// spare pair. Donor chains then fill the remaining fully-free columns.
void replay_once_split(Replay& rep, const detail::GHLayout& L, const MMOInstance& mmo,
                       const Orientation& o) {
    for (int e = 0; e < mmo.m(); ++e) {
        const Vertex tail = tail_of(mmo, o, e);
        const detail::EdgeSlot& E = L.edges[static_cast<size_t>(e)];
        const detail::SideSlot& S = L.side_at(mmo.host, e, tail);
        const detail::VertexSlot& W = L.verts[static_cast<size_t>(tail)];
        for (size_t i = 0; i < E.b.size(); ++i) {
            rep.slide(W.w, W.cx[free_split_column(rep, W)]);
            rep.slide(S.y[i], W.w);
            rep.slide(E.b[i], S.z[i]);
        }
        rep.slide(L.selection_at(mmo.host, e, head_of(mmo, o, e)), E.b_plus);
    }
    for (const detail::DonorSlot& D : L.supplier->donors) {
        rep.slide(D.d[2], D.d[1]);
        rep.slide(L.supplier->s, free_full_column(rep, L.verts));
        rep.slide(D.d[0], L.supplier->s);
    }
}

// Twice-split schedule: like the once-split one, but pending tokens walk
// through their own split vertex, the spare pair token retires to the spare
// split, and donor tokens park on the chain splits.
void replay_twice_split(Replay& rep, const detail::GHLayout& L, const MMOInstance& mmo,
                        const Orientation& o) {
    for (int e = 0; e < mmo.m(); ++e) {
        const Vertex tail = tail_of(mmo, o, e);
        const detail::EdgeSlot& E = L.edges[static_cast<size_t>(e)];
        const detail::SideSlot& S = L.side_at(mmo.host, e, tail);
        const detail::VertexSlot& W = L.verts[static_cast<size_t>(tail)];
        for (size_t i = 0; i < E.b.size(); ++i) {
            rep.slide(S.y[i], S.cy[i]);
            rep.slide(S.cy[i], W.w);
            rep.slide(W.w, W.cx[free_split_column(rep, W)]);
            rep.slide(E.b[i], S.z[i]);
        }
        rep.slide(L.selection_at(mmo.host, e, head_of(mmo, o, e)), E.b_plus);
        rep.slide(E.b_plus, E.c_plus);
    }
    for (const detail::DonorSlot& D : L.supplier->donors) {
        rep.slide(D.d[2], D.mid[3]);
        rep.slide(D.d[1], D.mid[1]);
        rep.slide(L.supplier->s, free_full_column(rep, L.verts));
        rep.slide(D.d[0], L.supplier->s);
    }
}

// A fresh emission must reproduce the construction exactly. Names alone can
// agree across different source graphs of equal shape, so the wiring is
// compared as well.
void check_emission(const GraphBuilder& bld, const LabeledConstruction& c, const char* what) {
    if (bld.names() != c.names || bld.build().edges() != c.graph.edges()) {
        throw std::invalid_argument(what);
    }
}

void check_budget(const Replay& rep, const DiscoveryInstance& inst) {
    if (rep.slides() != inst.budget) {
        throw std::logic_error("schedule length deviates from the budget");
    }
}

}  // namespace

DiscoverySequence witness_from_orientation(const LabeledConstruction& c, const MMOInstance& mmo,
                                           const Orientation& o) {
    const DiscoveryInstance& inst = require_instance(c);
    require_orientation(mmo, o);

    GraphBuilder bld;
    detail::GHLayout L = detail::emit_reduction(bld, mmo, inst.problem);
    check_emission(bld, c,
                   "construction does not match the single-host builder output for this source");

    Replay rep(inst.start);
    switch (inst.problem) {
        case Problem::IS:
            replay_plain_core(rep, L, mmo, o);
            break;
        case Problem::VC:
            replay_once_split(rep, L, mmo, o);
            break;
        default:
            replay_twice_split(rep, L, mmo, o);
            break;
    }
    check_budget(rep, inst);
    return rep.take();
}

DiscoverySequence witness_from_orientation(const LabeledConstruction& c,
                                           const std::vector<MMOInstance>& members, int which,
                                           const Orientation& o) {
    const DiscoveryInstance& inst = require_instance(c);
    if (which < 0 || which >= static_cast<int>(members.size())) {
        throw std::invalid_argument("selected member index is out of range");
    }
    const MMOInstance& mmo = members[static_cast<size_t>(which)];
    require_orientation(mmo, o);

    GraphBuilder bld;
    detail::BatchParts parts = detail::emit_batch(bld, members, inst.problem);
    check_emission(bld, c,
                   "construction does not match the batch builder output for these members");
    const detail::SelectorIds& sel = parts.selector;
    const detail::GHLayout& L = parts.copies[static_cast<size_t>(which)];

    Replay rep(inst.start);
    rep.slide(sel.unsel[static_cast<size_t>(which)], sel.sel[static_cast<size_t>(which)]);
    if (inst.problem == Problem::IS) {
        // Migrate the refill tokens onto the selected copy's pair and spare
        // vertices, then run the plain-copy schedule there.
        std::vector<Vertex> pair_targets;
        for (const detail::EdgeSlot& E : L.edges) {
            pair_targets.insert(pair_targets.end(), E.a.begin(), E.a.end());
        }
        for (size_t i = 0; i < sel.f.size(); ++i) {
            rep.slide(sel.h, pair_targets[i]);
            rep.slide(sel.f[i], sel.h);
        }
        for (size_t i = 0; i < sel.o.size(); ++i) {
            rep.slide(sel.q, L.edges[i].a_plus);
            rep.slide(sel.o[i], sel.q);
        }
        replay_plain_core(rep, L, mmo, o);
    } else if (inst.problem == Problem::VC) {
        // Retire the uncharged selection tokens behind the quay, then run
        // the per-edge schedule, retiring one spoke token behind the hub
        // for every column a pending token claims.
        for (int e = 0; e < mmo.m(); ++e) {
            rep.slide(sel.q, sel.o[static_cast<size_t>(e)]);
            rep.slide(L.selection_at(mmo.host, e, head_of(mmo, o, e)), sel.q);
        }
        size_t fi = 0;
        for (int e = 0; e < mmo.m(); ++e) {
            const Vertex tail = tail_of(mmo, o, e);
            const detail::EdgeSlot& E = L.edges[static_cast<size_t>(e)];
            const detail::SideSlot& S = L.side_at(mmo.host, e, tail);
            const detail::VertexSlot& W = L.verts[static_cast<size_t>(tail)];
            for (size_t i = 0; i < E.b.size(); ++i) {
                rep.slide(E.b[i], S.z[i]);
                const size_t col = free_split_column(rep, W);
                rep.slide(W.w, W.cx[col]);
                rep.slide(S.y[i], W.w);
                rep.slide(sel.h, sel.f[fi++]);
                rep.slide(W.x[col], sel.h);
            }
        }
    } else {
        // Same retirement pattern with transient hubs: the quay and the
        // weights hub are empty here and only ferry tokens through.
        for (int e = 0; e < mmo.m(); ++e) {
            rep.slide(L.selection_at(mmo.host, e, head_of(mmo, o, e)), sel.q);
            rep.slide(sel.q, sel.o[static_cast<size_t>(e)]);
        }
        size_t fi = 0;
        for (int e = 0; e < mmo.m(); ++e) {
            const Vertex tail = tail_of(mmo, o, e);
            const detail::EdgeSlot& E = L.edges[static_cast<size_t>(e)];
            const detail::SideSlot& S = L.side_at(mmo.host, e, tail);
            const detail::VertexSlot& W = L.verts[static_cast<size_t>(tail)];
            for (size_t i = 0; i < E.b.size(); ++i) {
                rep.slide(E.b[i], S.z[i]);
                rep.slide(S.y[i], S.cy[i]);
                rep.slide(S.cy[i], W.w);
                const size_t col = free_split_column(rep, W);
                rep.slide(W.w, W.cx[col]);
                rep.slide(W.x[col], sel.h);
                rep.slide(sel.h, sel.f[fi++]);
            }
        }
    }
    check_budget(rep, inst);
    return rep.take();
}

namespace {

// 1-based position of each pick inside its (sorted) class; throws unless
// the witness picks one vertex per class and the picks form a clique.
std::vector<int> check_clique(const MCCInstance& inst, const MCCWitness& w) {
    if (w.picks.size() != static_cast<size_t>(inst.kappa())) {
        throw std::invalid_argument("witness does not pick one vertex per class");
    }
    std::vector<int> pos(w.picks.size(), 0);
    for (size_t i = 0; i < w.picks.size(); ++i) {
        const std::vector<Vertex>& cls = inst.classes[i];
        const auto it = std::find(cls.begin(), cls.end(), w.picks[i]);
        if (it == cls.end()) {
            throw std::invalid_argument("pick " + std::to_string(i) + " lies outside its class");
        }
        pos[i] = static_cast<int>(it - cls.begin()) + 1;
    }
    for (size_t i = 0; i < w.picks.size(); ++i) {
        for (size_t j = i + 1; j < w.picks.size(); ++j) {
            if (!inst.g.has_edge(w.picks[i], w.picks[j])) {
                throw std::invalid_argument("picks are not pairwise adjacent");
            }
        }
    }
    return pos;
}

// Tokens one feed gadget drains, split by side and by origin. The class
// block sends the picked seat's low leaves (z <= x) to the s side and the
// high ones to the r side; the pair block sends the picked edge's leaves
// the other way around.
struct FeedSources {
    std::vector<Vertex> vs, es;  // s side: class-block, then pair-block leaves
    std::vector<Vertex> vr, er;  // r side, same split
};

FeedSources feed_sources(const detail::FvsLayout& L, int i, int j, int l, int x_l,
                         size_t e_sel) {
    FeedSources out;
    const int other = l == i ? j : i;
    const std::vector<Vertex>& qs =
        L.vblocks[static_cast<size_t>(l - 1)].q[static_cast<size_t>(x_l - 1)].at(other);
    const int n = static_cast<int>(qs.size());
    for (int z = 1; z <= x_l; ++z) out.vs.push_back(qs[static_cast<size_t>(z - 1)]);
    for (int z = x_l + 1; z <= n; ++z) out.vr.push_back(qs[static_cast<size_t>(z - 1)]);
    const std::vector<Vertex>& eq = L.eblocks.at({i, j}).q[e_sel];
    const int off = l == i ? 0 : n;
    for (int z = x_l + 1; z <= n; ++z) out.es.push_back(eq[static_cast<size_t>(off + z - 1)]);
    for (int z = 1; z <= x_l; ++z) out.er.push_back(eq[static_cast<size_t>(off + z - 1)]);
    return out;
}

// Ferries each source token through the (transient) hub onto the next
// landing-row vertex.
void fill_feed(Replay& rep, Vertex hub, const std::vector<Vertex>& rows,
               const std::vector<Vertex>& sources) {
    for (size_t idx = 0; idx < sources.size(); ++idx) {
        rep.slide(sources[idx], hub);
        rep.slide(hub, rows[idx]);
    }
}

// Anchored feed: the anchor's own token leads into the landing row, each
// leaf token chases it through the anchor and hub, and the last leaf stays
// on the anchor. Costs three slides per leaf; does nothing without leaves.
void pump_feed(Replay& rep, Vertex anchor, Vertex hub, const std::vector<Vertex>& rows,
               size_t& next_row, const std::vector<Vertex>& leaves) {
    if (leaves.empty()) return;
    rep.slide(anchor, hub);
    rep.slide(hub, rows[next_row++]);
    for (size_t idx = 0; idx + 1 < leaves.size(); ++idx) {
        rep.slide(leaves[idx], anchor);
        rep.slide(anchor, hub);
        rep.slide(hub, rows[next_row++]);
    }
    rep.slide(leaves.back(), anchor);
}

}  // namespace

DiscoverySequence witness_from_clique(const LabeledConstruction& c, const MCCInstance& inst,
                                      const MCCWitness& w) {
    const DiscoveryInstance& dinst = require_instance(c);
    const std::vector<int> pos = check_clique(inst, w);

    GraphBuilder bld;
    detail::FvsLayout L = detail::emit_fvs(bld, inst, dinst.problem);
    check_emission(bld, c,
                   "construction does not match the clique builder output for this source");

    const int kappa = inst.kappa();
    const int n = inst.class_size();
    const bool leafy = dinst.problem == Problem::IS;
    const bool anchored = dinst.problem == Problem::VC;

    // Picked edge per class pair, as an index into ascending edge order.
    std::map<std::pair<int, int>, size_t> e_sel;
    for (int i = 1; i <= kappa; ++i) {
        for (int j = i + 1; j <= kappa; ++j) {
            const EdgeId want(w.picks[static_cast<size_t>(i - 1)],
                              w.picks[static_cast<size_t>(j - 1)]);
            const std::vector<EdgeId> between = edges_between(inst, i - 1, j - 1);
            const auto it = std::find(between.begin(), between.end(), want);
            if (it == between.end()) {
                throw std::logic_error("picked edge is missing from its class pair");
            }
            e_sel[{i, j}] = static_cast<size_t>(it - between.begin());
        }
    }

    Replay rep(dinst.start);

    // Seat moves: each block's seat token takes the picked seat; anchored
    // builds refill the vacated spot.
    for (int i = 1; i <= kappa; ++i) {
        const detail::FvsVertexBlock& vb = L.vblocks[static_cast<size_t>(i - 1)];
        rep.slide(vb.t, vb.p[static_cast<size_t>(pos[static_cast<size_t>(i - 1)] - 1)]);
        if (anchored) rep.slide(vb.t_extra, vb.t);
    }
    for (const auto& [key, eb] : L.eblocks) {
        rep.slide(eb.t, eb.p[e_sel.at(key)]);
        if (anchored) rep.slide(eb.t_extra, eb.t);
    }

    // Park the companions of every unpicked row behind the bins, two
    // slides each; the slot counts match exactly.
    if (leafy) {
        for (int i = 1; i <= kappa; ++i) {
            const detail::FvsVertexBlock& vb = L.vblocks[static_cast<size_t>(i - 1)];
            size_t slot = 0;
            for (int x = 1; x <= n; ++x) {
                if (x == pos[static_cast<size_t>(i - 1)]) continue;
                for (const auto& [j, mates] : vb.co[static_cast<size_t>(x - 1)]) {
                    for (Vertex mate : mates) {
                        rep.slide(mate, vb.bin);
                        rep.slide(vb.bin, vb.slots[slot++]);
                    }
                }
            }
        }
        for (const auto& [key, eb] : L.eblocks) {
            size_t slot = 0;
            for (size_t e = 0; e < eb.co.size(); ++e) {
                if (e == e_sel.at(key)) continue;
                for (Vertex mate : eb.co[e]) {
                    rep.slide(mate, eb.bin);
                    rep.slide(eb.bin, eb.slots[slot++]);
                }
            }
        }
    }

    // Drain the picked rows into the feed gadgets.
    for (int i = 1; i <= kappa; ++i) {
        for (int j = i + 1; j <= kappa; ++j) {
            for (int l : {i, j}) {
                const detail::FvsConnector& cn = L.connectors.at({i, j, l});
                const FeedSources fs =
                    feed_sources(L, i, j, l, pos[static_cast<size_t>(l - 1)], e_sel.at({i, j}));
                if (anchored) {
                    size_t row = 0;
                    pump_feed(rep, cn.sv, cn.s, cn.a, row, fs.vs);
                    pump_feed(rep, cn.se, cn.s, cn.a, row, fs.es);
                    row = 0;
                    pump_feed(rep, cn.rv, cn.r, cn.d, row, fs.vr);
                    pump_feed(rep, cn.re, cn.r, cn.d, row, fs.er);
                } else {
                    std::vector<Vertex> to_s = fs.vs;
                    to_s.insert(to_s.end(), fs.es.begin(), fs.es.end());
                    std::vector<Vertex> to_r = fs.vr;
                    to_r.insert(to_r.end(), fs.er.begin(), fs.er.end());
                    fill_feed(rep, cn.s, cn.a, to_s);
                    fill_feed(rep, cn.r, cn.d, to_r);
                }
            }
        }
    }

    check_budget(rep, dinst);
    return rep.take();
}

namespace {

// The order must visit every member vertex exactly once along edges.
void check_traversal(const Graph& src, const HamPathWitness& w) {
    const int n = src.num_vertices();
    if (static_cast<int>(w.order.size()) != n) {
        throw std::invalid_argument("witness order must visit every vertex exactly once");
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (Vertex v : w.order) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) {
            throw std::invalid_argument("witness order must visit every vertex exactly once");
        }
        seen[static_cast<size_t>(v)] = 1;
    }
    for (size_t x = 0; x + 1 < w.order.size(); ++x) {
        if (!src.has_edge(w.order[x], w.order[x + 1])) {
            throw std::invalid_argument("witness order steps across a non-edge");
        }
    }
}

// The picks must name one edge of each color and form a matching.
std::vector<int> check_matching(const RainbowInstance& src, const RainbowWitness& w) {
    if (static_cast<int>(w.by_color.size()) != src.colors()) {
        throw std::invalid_argument("witness must pick one edge per color");
    }
    std::vector<int> sel;
    sel.reserve(w.by_color.size());
    for (size_t color = 0; color < w.by_color.size(); ++color) {
        const std::optional<int> idx = src.g.edge_index(w.by_color[color]);
        if (!idx || src.color[static_cast<size_t>(*idx)] != static_cast<int>(color)) {
            throw std::invalid_argument("witness pick is not an edge of its color");
        }
        sel.push_back(*idx);
    }
    for (size_t a = 0; a < w.by_color.size(); ++a) {
        for (size_t b = a + 1; b < w.by_color.size(); ++b) {
            const EdgeId& ea = w.by_color[a];
            const EdgeId& eb = w.by_color[b];
            if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v) {
                throw std::invalid_argument("witness picks are not a matching");
            }
        }
    }
    return sel;
}

}  // namespace

DiscoverySequence witness_from_hampath(const LabeledConstruction& c,
                                       const std::vector<HamPathInstance>& members, int which,
                                       const HamPathWitness& w) {
    const DiscoveryInstance& dinst = require_instance(c);
    if (which < 0 || which >= static_cast<int>(members.size())) {
        throw std::invalid_argument("selected member index is out of range");
    }
    check_traversal(members[static_cast<size_t>(which)].g, w);

    GraphBuilder bld;
    detail::SpdLayout L = detail::emit_spd(bld, members);
    check_emission(bld, c,
                   "construction does not match the ordering batch output for these members");

    const int n = members[static_cast<size_t>(which)].g.num_vertices();
    Replay rep(dinst.start);
    // Each position anchor walks its tail into the selected member's cell
    // for that position under the order: n slides per anchor.
    for (int x = 1; x <= n; ++x) {
        const size_t y = static_cast<size_t>(w.order[static_cast<size_t>(x - 1)]);
        const auto& tail = L.tail[static_cast<size_t>(which)][static_cast<size_t>(x - 1)][y];
        Vertex cur = L.anchors[static_cast<size_t>(x - 1)];
        for (size_t i = tail.size(); i-- > 0;) {
            rep.slide(cur, tail[i]);
            cur = tail[i];
        }
        rep.slide(cur, L.cell[static_cast<size_t>(which)][static_cast<size_t>(x - 1)][y]);
    }

    check_budget(rep, dinst);
    return rep.take();
}

DiscoverySequence witness_from_rainbow(const LabeledConstruction& c,
                                       const std::vector<RainbowInstance>& members, int which,
                                       const RainbowWitness& w) {
    const DiscoveryInstance& dinst = require_instance(c);
    if (which < 0 || which >= static_cast<int>(members.size())) {
        throw std::invalid_argument("selected member index is out of range");
    }
    const RainbowInstance& src = members[static_cast<size_t>(which)];
    const std::vector<int> sel = check_matching(src, w);

    GraphBuilder bld;
    detail::VcutLayout L = detail::emit_vcutd(bld, members);
    check_emission(bld, c,
                   "construction does not match the separator batch output for these members");

    const int m = src.g.num_edges();
    const detail::VcutMember& gm = L.members[static_cast<size_t>(which)];
    Replay rep(dinst.start);

    // Fills one level side of the selected member with a slack group's
    // designated endpoints, leaving only the copy of the excepted edge open.
    const auto fill_side = [&](int group, const std::vector<Vertex>& side, int skip) {
        const auto& endpoints = L.slack_u[static_cast<size_t>(group - 1)];
        size_t j = 0;
        for (int h = 0; h < m; ++h) {
            if (h == skip) continue;
            rep.slide(endpoints[j++], side[static_cast<size_t>(h)]);
        }
    };

    // Around pick p the open copies pair up level by level: level p keeps
    // entry copy p and exit copy p+1 open, so no clash or forwarding path
    // connects the open copies and the member blocks every through route.
    fill_side(1, gm.entry[0], sel[0]);
    const int levels = src.colors() - 1;
    for (int p = 1; p <= levels; ++p) {
        fill_side(2 * p, gm.exit[static_cast<size_t>(p - 1)], sel[static_cast<size_t>(p)]);
        if (2 * p + 1 <= 2 * levels) {
            fill_side(2 * p + 1, gm.entry[static_cast<size_t>(p)], sel[static_cast<size_t>(p)]);
        }
    }
    // Every partner endpoint refills its vacated designated endpoint, so the
    // slack edges stay blocked.
    for (size_t i = 0; i < L.slack_mate.size(); ++i) {
        for (size_t j = 0; j < L.slack_mate[i].size(); ++j) {
            rep.slide(L.slack_mate[i][j], L.slack_u[i][j]);
        }
    }
    // Each depth guard drops onto the tree node rooting the subtree just off
    // the path to the selected member's leaf, one slide each.
    for (int d = 1; d <= L.log_t; ++d) {
        const size_t q = static_cast<size_t>(which) >> (L.log_t - d);
        rep.slide(L.guards[static_cast<size_t>(d - 1)], L.tree[static_cast<size_t>(d)][q ^ 1]);
    }

    check_budget(rep, dinst);
    return rep.take();
}

}  // namespace disco
