#pragma once

#include <vector>

#include "discokit/constructions.hpp"
#include "discokit/discovery.hpp"
#include "discokit/mmo.hpp"

namespace disco {

// Replays the intended slide schedule of a single-host builder's output
// (reduce_vcd, reduce_isd, reduce_dsd — picked by the instance's problem)
// for a feasible orientation of the source instance. The returned sequence
// starts at the construction's start configuration, spends exactly the
// budget, and moves one token per step, each slide target chosen
// lowest-id-first. Whether the final configuration is feasible is the
// construction's claim, not this function's: check with validate_sequence.
//
// Throws std::invalid_argument when the construction was not built from
// this source instance, carries no discovery instance, or the orientation
// is not feasible for the source.
DiscoverySequence witness_from_orientation(const LabeledConstruction& c, const MMOInstance& mmo,
                                           const Orientation& o);

// Batch-builder form (compose_vcd, compose_isd, compose_dsd): replays the
// schedule that picks member `which` (0-based) and resolves that copy with
// the given feasible orientation of members[which]. Same contract as above.
DiscoverySequence witness_from_orientation(const LabeledConstruction& c,
                                           const std::vector<MMOInstance>& members, int which,
                                           const Orientation& o);

// Clique-builder form (reduce_fvs, picked by the instance's problem):
// replays the schedule that moves every block's seat token onto the picked
// seat and drains the picked rows into the feed gadgets' landing rows. IS
// targets additionally park the companions of every unpicked row behind
// the collector bins; VC targets pump each feed through its anchors and
// refill the seats and anchors. `w` must pick one vertex per class with
// the picks pairwise adjacent in the source graph. Same determinism and
// budget contract as above; throws std::invalid_argument when the
// construction was not built from this source for this problem kind or the
// picks are not a clique.
DiscoverySequence witness_from_clique(const LabeledConstruction& c, const MCCInstance& inst,
                                      const MCCWitness& w);

// Ordering-batch form (compose_spd): walks every position anchor down its
// tail into member `which`'s cell for that position under the given
// vertex order, lowest position first, n slides per anchor. `w.order` must
// visit every member vertex exactly once along edges. Same determinism and
// budget contract as above; throws std::invalid_argument when the
// construction was not built from these members or the order is not a
// traversal of members[which].
DiscoverySequence witness_from_hampath(const LabeledConstruction& c,
                                       const std::vector<HamPathInstance>& members, int which,
                                       const HamPathWitness& w);

// Separator-batch form (compose_vcutd): fills member `which`'s level copies
// around the picked color classes (group 1 first, then each level's exit
// and next entry side together), refills every designated slack endpoint
// from its partner, and drops each depth guard onto the tree node rooting
// the subtree just off the path to member `which`, one slide per token.
// `w.by_color` must pick one edge per color forming a matching in
// members[which]. Same determinism and budget contract as above; throws
// std::invalid_argument when the construction was not built from these
// members or the picks are not a one-per-color matching.
DiscoverySequence witness_from_rainbow(const LabeledConstruction& c,
                                       const std::vector<RainbowInstance>& members, int which,
                                       const RainbowWitness& w);

}  // namespace disco
