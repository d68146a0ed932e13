#pragma once

#include "hush/automaton.hpp"

namespace hush {

// delta^H: successors on sigma become the union of successors on all letters
// that agree with sigma outside the hidden mask. Acceptance unchanged.
OmegaAutomaton applyNoise(const OmegaAutomaton& a, Letter hiddenMask);

// Counting construction GenBuchi -> Buchi. Input must have >= 1 acceptance set.
OmegaAutomaton degeneralize(const OmegaAutomaton& a);

// Product of Buchi automata, reachable states only, GenBuchi output with one
// set per operand.
OmegaAutomaton intersectNbw(const std::vector<const OmegaAutomaton*>& parts);
OmegaAutomaton intersectNbw(const OmegaAutomaton& a, const OmegaAutomaton& b);

// Union of two Buchi automata (fresh initial state branching to both).
OmegaAutomaton unionNbw(const OmegaAutomaton& a, const OmegaAutomaton& b);

// Complement of a deterministic parity automaton: totalize, then rank+1.
OmegaAutomaton complementDpw(const OmegaAutomaton& d);

// DPW -> language-equal NBW (guess the maximal even rank seen from some point).
OmegaAutomaton dpwToNbw(const OmegaAutomaton& d);

// Flip Buchi <-> CoBuchi acceptance flag; structure unchanged.
// Contract: reading the result universally (resp. nondeterministically)
// complements the language of the input read the other way.
OmegaAutomaton dualize(const OmegaAutomaton& a);

// Deterministic Buchi -> equivalent deterministic parity (ranks {1,2}).
OmegaAutomaton dbwToDpw(const OmegaAutomaton& d);

// Map parity ranks onto 1..k preserving order and parity of each rank.
OmegaAutomaton compressRanks(const OmegaAutomaton& d);

// Intersection of a deterministic parity automaton with a deterministic
// Buchi automaton, result deterministic parity. Rank-memory construction:
// remember the maximal parity rank since the last Buchi-accepting visit and
// emit it there; elsewhere emit rank 1.
OmegaAutomaton intersectDpwDbw(const OmegaAutomaton& dpw, const OmegaAutomaton& dbw);

// Buchi automaton accepting exactly the single lasso word w.
OmegaAutomaton lassoAutomaton(const SignalTable& t, const LassoWord& w);

// Intersection of a nondeterministic Buchi automaton with a deterministic
// parity automaton, result a nondeterministic parity automaton.
OmegaAutomaton productNbwDetParity(const OmegaAutomaton& nbw, const OmegaAutomaton& dpar);

// L(a) ⊆ L(b)? b given as a deterministic parity automaton.
// On violation returns a counterexample word in L(a) \ L(b).
std::optional<LassoWord> containedInDpw(const OmegaAutomaton& a, const OmegaAutomaton& dpw);

}  // namespace hush
