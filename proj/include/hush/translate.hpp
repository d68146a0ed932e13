#pragma once

#include "hush/automaton.hpp"
#include "hush/ltl.hpp"

namespace hush {

// Tableau translation of an NNF formula to a nondeterministic generalized
// Buchi automaton with one acceptance set per until/eventually subformula
// (at least one set overall). W and R are desugared internally.
OmegaAutomaton ltlToNgbw(const LtlPtr& f, const SignalTable& table);

// Convenience: toNnf + ltlToNgbw + degeneralize + size reduction.
OmegaAutomaton ltlToNbw(const LtlPtr& f, const SignalTable& table);

// NBW for the negation of f.
OmegaAutomaton ltlNegToNbw(const LtlPtr& f, const SignalTable& table);

}  // namespace hush
