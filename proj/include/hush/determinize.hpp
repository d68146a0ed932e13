#pragma once

#include "hush/automaton.hpp"

namespace hush {

// NBW -> language-equal deterministic parity automaton (max-even, total).
// States are Safra-style labeled trees kept in node-creation order together
// with the priority emitted by the incoming transition. Input is reduced
// (reachable/live/bisim) first; output ranks are compressed.
OmegaAutomaton determinize(const OmegaAutomaton& nbw);

}  // namespace hush
