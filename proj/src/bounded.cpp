#include "hush/bounded.hpp"

#include <algorithm>
#include <stdexcept>

#include "hush/ops.hpp"

namespace hush {

namespace {

// Backtracking over canonical transition tables: states are numbered in
// first-reference order (an edge may target at most one state beyond the
// highest index referenced so far), outputs and targets tried in ascending
// order. A partial machine is pruned when its already-defined edges admit a
// computation accepted by the complemented monitor.
struct Search {
  const SignalTable& table;
  const OmegaAutomaton& comp;  // complement of the monitor, det parity
  std::vector<Letter> inputLetters;
  std::vector<Letter> outputLetters;
  int m = 0;

  std::vector<Letter> output;
  std::vector<std::vector<int>> next;
  std::optional<Transducer> found;

  int slotsPerState() const { return 1 + int(inputLetters.size()); }

  // Buchi automaton over the edges defined before `slot` whose target output
  // is already fixed; any accepted lasso survives into every completion.
  bool partialRevealed(int slot) const {
    int I = int(inputLetters.size());
    OmegaAutomaton a;
    a.table = table;
    a.kind = AccKind::Buchi;
    a.initial = 0;
    int L = a.numLetters();
    a.trans.assign(m, std::vector<std::vector<int>>(L));
    int outputsAssigned = 0;
    for (int s = 0; s < m; ++s)
      if (s * slotsPerState() < slot) ++outputsAssigned;
    for (int s = 0; s < m; ++s) {
      for (int i = 0; i < I; ++i) {
        if (s * slotsPerState() + 1 + i >= slot) continue;
        int to = next[s][i];
        if (to >= outputsAssigned) continue;
        a.trans[s][inputLetters[i] | output[to]].push_back(to);
      }
    }
    a.inSet.assign(1, std::vector<char>(m, 1));
    return isEmptyWitness(productNbwDetParity(a, comp)).has_value();
  }

  void go(int slot, int maxUsed) {
    if (found) return;
    int per = slotsPerState();
    if (slot == m * per) {
      if (maxUsed != m - 1) return;  // some state never referenced
      Transducer t;
      t.table = table;
      t.initial = 0;
      t.output = output;
      t.next = next;
      t.inputLetters = inputLetters;
      t.validate();
      found = std::move(t);
      return;
    }
    int s = slot / per;
    int k = slot % per;
    if (k == 0) {
      for (Letter o : outputLetters) {
        output[s] = o;
        go(slot + 1, maxUsed);
        if (found) return;
      }
      return;
    }
    int i = k - 1;
    int hi = std::min(maxUsed + 1, m - 1);
    bool rowEnd = (k == per - 1);
    for (int to = 0; to <= hi; ++to) {
      next[s][i] = to;
      int used = std::max(maxUsed, to);
      if (rowEnd && partialRevealed(slot + 1)) continue;
      go(slot + 1, used);
      if (found) return;
    }
  }
};

}  // namespace

std::optional<Transducer> boundedSynthesis(const SpecSide& spec,
                                           const std::vector<SecretSpec>& secrets,
                                           const SignalTable& table, Letter h, int n) {
  if (n < 1) throw std::runtime_error("boundedSynthesis: bound must be >= 1");
  OmegaAutomaton monitor = buildPrivacyDpw(spec, secrets, table, h);
  OmegaAutomaton comp = complementDpw(monitor);
  for (int m = 1; m <= n; ++m) {
    Search se{table, comp, table.inputLetters(), table.outputLetters(), m};
    se.output.assign(m, 0);
    se.next.assign(m, std::vector<int>(se.inputLetters.size(), 0));
    se.go(0, 0);
    if (se.found) {
      if (containedInDpw(transducerAutomaton(*se.found), monitor))
        throw std::logic_error("boundedSynthesis: pruning accepted a bad machine");
      return se.found;
    }
  }
  return std::nullopt;
}

}  // namespace hush
