#pragma once

#include <vector>

#include "discokit/discovery.hpp"
#include "discokit/gadgets.hpp"
#include "discokit/mmo.hpp"
#include "discokit/pathdecomp.hpp"
#include "discokit/sources.hpp"

namespace disco {

// Each builder in this header emits a discovery instance whose answer tracks
// the source instance(s), together with symbolic vertex names, a path
// decomposition of certified width, and the instantiated budget formula in
// the provenance. All builders are deterministic: the same input yields the
// same construction, vertex ids, and names.

// --- single-instance builders over an orientation instance ---

// Cover-discovery instance over the once-split member graph with a donor
// component: budget m + 3rn, decomposition width at most width(mmo.pd) + 7.
// Requires r*n >= sigma_total.
LabeledConstruction reduce_vcd(const MMOInstance& mmo);

// Independence-discovery instance over the plain member graph: budget
// m + 3*sigma_total, decomposition width at most width(mmo.pd) + 6.
LabeledConstruction reduce_isd(const MMOInstance& mmo);

// Domination-discovery instance over the twice-split member graph with a
// donor component and a guard pair: budget 2m + 4rn, decomposition width at
// most width(mmo.pd) + 9. Requires r*n >= sigma_total.
LabeledConstruction reduce_dsd(const MMOInstance& mmo);

// --- batch builders over t same-shape orientation instances ---
// Members must be nonempty, pairwise shape-compatible (same n, m, total
// weight, and bound; see shape_mismatch), and have at least one host edge.
// Copy j (1-based) contributes vertices prefixed "m<j>.". The emitted
// instance is a yes exactly when some member is (see the notes on the known
// schedule gaps in the test suite).

// Cover-discovery batch: once-split copies without donors, a selection
// component whose hubs carry budget+1 pendants each, direct picker-to-copy
// wiring; budget 2m + 5*sigma_total + 1, width at most
// max_j width(pd_j) + 10.
LabeledConstruction compose_vcd(const std::vector<MMOInstance>& members);

// Independence-discovery batch: plain copies, keeper-to-copy wiring on the
// untokened side; budget 3m + 5*sigma_total + 1, width at most
// max_j width(pd_j) + 10.
LabeledConstruction compose_isd(const std::vector<MMOInstance>& members);

// Domination-discovery batch: twice-split copies with per-copy guard pairs,
// picker-to-copy wiring through midpoint vertices ("via.<target>"); budget
// 2m + 6*sigma_total + 1, width at most max_j width(pd_j) + 12.
LabeledConstruction compose_dsd(const std::vector<MMOInstance>& members);

// --- builders over a covering-cliques instance ---

// A construction paired with a feedback-vertex certificate for its graph.
struct FvsConstruction {
    LabeledConstruction construction;
    FvsCertificate certificate;
};

// Discovery instance of the chosen kind (VC, IS, or DS) over a
// block-and-connector graph whose feedback vertex number is certified by
// the returned certificate: deleting certificate.deleted leaves a forest.
// The source instance must pass MCCInstance::validate (equal class sizes;
// use pad_classes first when they differ) and have kappa >= 2, n >= 1.
// Budgets: (12n+2)*C(kappa,2) + 2*kappa for VC,
// (4n^2+1)*C(kappa,2) + 4nm + kappa for IS, (8n+1)*C(kappa,2) + kappa for
// DS, where C(kappa,2) counts class pairs and m counts edges of the padded
// graph. Certificate sizes: 8*C(kappa,2) for VC, 5*C(kappa,2) + kappa for
// IS, 4*C(kappa,2) for DS.
FvsConstruction reduce_fvs(Problem target, const MCCInstance& inst);

// --- builders over path and separation instances ---

// Shortest-path discovery batch over t vertex-ordering instances with the
// same vertex count n: a cell grid per member, terminals "a"/"b", one
// anchor per position with a length-n tail to each of its cells; k = n + 2
// tokens, budget n^2. Requires every member nonempty and same n.
LabeledConstruction compose_spd(const std::vector<HamPathInstance>& members);

// Separator-discovery batch over t edge-coloring instances: members are
// padded to the next power of two by duplicating the last; layered conflict
// gadgets per member, a binary selection tree, slack groups, and long-path
// spacing; terminals ("a1", "b1"). Requires at least one member and total
// color count kappa >= 2 per member.
LabeledConstruction compose_vcutd(const std::vector<RainbowInstance>& members);

}  // namespace disco
