#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hush/automaton.hpp"
#include "hush/game.hpp"

namespace hush {

// Moore-style transducer: after consuming input i_0..i_j the machine sits in
// state s_{j+1} and emits output[s_{j+1}] as o_j (the initial state's label is
// never emitted).
struct Transducer {
  SignalTable table;
  int initial = 0;
  std::vector<Letter> output;          // per state, subset of the output mask
  std::vector<std::vector<int>> next;  // [state][input letter index]
  std::vector<Letter> inputLetters;    // ascending enumeration of 2^I

  int numStates() const { return int(output.size()); }
  int inputIndex(Letter i) const;
  void validate() const;
};

// Computation of t on the input lasso (letters within the input mask);
// result is a lasso over the full alphabet.
LassoWord runTransducer(const Transducer& t, const LassoWord& wI);

// Winning-strategy extraction from a solved realizability game; nullopt if
// the system loses from the initial vertex. Tie-break: smallest output letter
// among moves consistent with the solver's strategy.
std::optional<Transducer> extractTransducer(const OmegaAutomaton& dpw,
                                            const RealizabilityGame& rg,
                                            const GameSolution& sol);

// Buchi automaton (all states accepting) whose language is exactly the set of
// computations of t.
OmegaAutomaton transducerAutomaton(const Transducer& t);

std::string printTransducer(const Transducer& t);
Transducer parseTransducer(const std::string& text);
std::string writeDotTransducer(const Transducer& t);

}  // namespace hush
