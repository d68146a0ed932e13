#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hush/lasso.hpp"
#include "hush/signals.hpp"

namespace hush {

enum class AccKind { Buchi, CoBuchi, GenBuchi, Parity };

// Explicit-state omega automaton over the alphabet 2^signals.
// Transition function may be partial: trans[q][letter] may be empty.
// Parity: max-even convention, ranks >= 1; the maximal rank visited
// infinitely often must be even.
struct OmegaAutomaton {
  SignalTable table;
  int initial = 0;
  // trans[state][letter] = sorted vector of successors
  std::vector<std::vector<std::vector<int>>> trans;
  AccKind kind = AccKind::Buchi;
  // Buchi/CoBuchi: inSet[0][q]; GenBuchi: one entry per acceptance set
  std::vector<std::vector<char>> inSet;
  std::vector<int> rank;  // Parity only
  std::vector<std::string> names;  // optional provenance, may be empty

  int numStates() const { return int(trans.size()); }
  int numLetters() const { return 1 << table.size(); }
  bool isDeterministic() const;
  bool isTotal() const;
  // Throws on structural violations (used by tests and format import).
  void validate() const;
};

struct LassoWitness {
  LassoWord word;
};

// --- structural helpers -----------------------------------------------------

// Single-state automaton with empty language over the table (no accepting run).
OmegaAutomaton emptyAutomaton(const SignalTable& t, AccKind kind);

// Adds a rejecting sink if any trans entry is empty. Parity sink has rank 1.
OmegaAutomaton totalize(const OmegaAutomaton& a);

// Restrict to states reachable from the initial state.
OmegaAutomaton restrictReachable(const OmegaAutomaton& a);

// Drop states from which no accepting run exists (language preserved).
// Result of trimming everything is emptyAutomaton.
OmegaAutomaton liveTrim(const OmegaAutomaton& a);

// Quotient by (forward) bisimulation: same acceptance signature and same
// successor classes per letter. Language preserving for all kinds.
OmegaAutomaton quotientBisim(const OmegaAutomaton& a);

// reachable + bisim (+ liveTrim for Buchi/GenBuchi) — size reduction before
// expensive constructions.
OmegaAutomaton reduceNbw(const OmegaAutomaton& a);

// --- emptiness / membership -------------------------------------------------

// True iff L(a) nonempty, reading CoBuchi nondeterministically.
// On nonemptiness returns a witness lasso word.
std::optional<LassoWitness> isEmptyWitness(const OmegaAutomaton& a);
bool isEmpty(const OmegaAutomaton& a);

// True iff some run of a on w is accepting (CoBuchi read nondeterministically).
bool memberLasso(const OmegaAutomaton& a, const LassoWord& w);

}  // namespace hush
