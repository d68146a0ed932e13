#pragma once

#include <vector>

#include "hush/automaton.hpp"

namespace hush {

// Max-even parity game. Player 0 (the system) wins a play iff the maximal
// rank visited infinitely often is even. Games must be total (every vertex
// has a successor); use totalizeGame if needed.
struct ParityGame {
  std::vector<int> owner;              // 0 or 1
  std::vector<int> rank;               // >= 1
  std::vector<std::vector<int>> succ;  // sorted
  int initial = 0;

  int numVertices() const { return int(owner.size()); }
};

struct GameSolution {
  std::vector<int> winner;    // per vertex, 0 or 1
  std::vector<int> strategy;  // successor choice where owner == winner, else -1
};

// Adds a losing sink for each player as needed so every vertex has a move.
ParityGame totalizeGame(const ParityGame& g);

// Zielonka with attractors; positional strategies for both players.
GameSolution solveParity(const ParityGame& g);

// Realizability game of a total deterministic parity automaton over the
// table's input/output split: environment vertices are automaton states,
// system vertices are (state, input letter) pairs.
// Vertex layout: env q -> q; system (q, i) -> n + q * |inputLetters| + iIdx.
struct RealizabilityGame {
  ParityGame game;
  std::vector<Letter> inputLetters;
  std::vector<Letter> outputLetters;
  int dpwStates = 0;
};

RealizabilityGame realizabilityGame(const OmegaAutomaton& dpw);

}  // namespace hush
