#pragma once

#include <optional>
#include <string>

#include "hush/automaton.hpp"

namespace hush {

// HOA v1 export. Acceptance: Buchi, generalized-Buchi, co-Buchi, and
// parity max odd (ranks map to sets rank-1). Output signals are listed in
// a controllable-AP header. Deterministic, timestamp-free.
std::string writeHoa(const OmegaAutomaton& a, const std::string& name = "");

// HOA v1 import. Accepts Buchi / generalized-Buchi / co-Buchi / parity in
// any of the four parity conventions (converted to max-even ranks at the
// boundary). If `expect` is given, AP names are matched against that table
// (the table may have additional signals, which the automaton then ignores);
// otherwise a fresh table is built (controllable-AP entries become outputs).
OmegaAutomaton readHoa(const std::string& text,
                       const std::optional<SignalTable>& expect = std::nullopt);

// GraphViz export.
std::string writeDot(const OmegaAutomaton& a);

}  // namespace hush
