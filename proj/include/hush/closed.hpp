#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hush/automaton.hpp"
#include "hush/transducer.hpp"

namespace hush {

struct Graph {
  int vertexCount = 0;
  std::vector<std::pair<int, int>> edges;
};

// First line "n m", then m lines "u v" (0-indexed, no self-loops).
Graph parseGraph(const std::string& text);

// Closed systems: no input signals, the system picks a single computation.
// Realizability with privacy reduces to nonemptiness of
// L(spec) & noise(L(secret)) & noise(L(!secret)) — no determinization, so the
// secret automaton must be deterministic (Buchi or parity).
std::optional<LassoWitness> closedRealizable(const OmegaAutomaton& spec,
                                             const OmegaAutomaton& secret, Letter h);

struct ClosedSolution {
  Letter hideMask = 0;
  LassoWord witness;
};

// Budgeted search: first hide-set (enumerateHideSets order) that works.
std::optional<ClosedSolution> closedSearch(const OmegaAutomaton& spec,
                                           const OmegaAutomaton& secret,
                                           const SignalTable& table, int b);

// Witness lasso as an input-free transducer (one state per position, plus an
// entry state when the prefix is nonempty).
Transducer lassoToClosedTransducer(const LassoWord& w, const SignalTable& table);

// --- reduction fixtures -------------------------------------------------------

struct ClosedFixture {
  OmegaAutomaton spec;
  OmegaAutomaton secret;
  SignalTable table;
};

// One output signal per vertex, uniform cost 1. Spec accepts only the all-empty
// word; the secret's words select, per edge position, a touched endpoint — so a
// hide-set works iff it is a vertex cover.
ClosedFixture vertexCoverFixture(const Graph& g);

// Variant for the spec-knowing observer: the spec is the union of the all-empty
// word and the cover-encoding language, and the secret is the latter.
ClosedFixture vertexCoverKnowledgeFixture(const Graph& g);

struct HardnessFixture {
  OmegaAutomaton secret;    // deterministic Buchi over the extended table
  SignalTable table;        // original signals plus a hidden state-track
  Letter hiddenMask = 0;    // the track signals (cost 0; originals cost 1)
};

// Encodes runs of `a` (plus a rejecting sink reachable from the initial state)
// into a hidden output track: synthesis with privacy over (spec = true,
// secret = fixture, b = 0) succeeds iff L(a) is realizable.
// Requires a nondeterministic Buchi automaton with a single initial state.
HardnessFixture hidingHardnessFixture(const OmegaAutomaton& a);

}  // namespace hush
