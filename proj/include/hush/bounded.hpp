#pragma once

#include <optional>

#include "hush/privacy.hpp"

namespace hush {

// Smallest transducer with at most n states (if any) all of whose
// computations satisfy the spec and keep every secret ambiguous under h.
// Backtracking over canonical (first-visit order) transition tables with
// containment pruning against the complemented monitor.
std::optional<Transducer> boundedSynthesis(const SpecSide& spec,
                                           const std::vector<SecretSpec>& secrets,
                                           const SignalTable& table, Letter h, int n);

}  // namespace hush
