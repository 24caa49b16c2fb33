#pragma once

#include <string>

#include "discokit/kernelize.hpp"

namespace disco::detail {

// Canonical no-instance for rejecting reductions: a single edge carrying no
// tokens with budget 0. The empty configuration covers/dominates nothing, so
// the instance is a fixed "no" for vertex-cover and dominating-set problems.
DiscoveryInstance canonical_no_instance(Problem p);

// A rejected KernelReport wrapping the canonical no-instance.
KernelReport rejection_report(Problem p, const std::string& note, const std::string& bound);

}  // namespace disco::detail
