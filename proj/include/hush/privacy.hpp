#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hush/automaton.hpp"
#include "hush/ltl.hpp"
#include "hush/transducer.hpp"

namespace hush {

// A specification-like object: either an LTL formula or an omega automaton
// (deterministic parity/Buchi preferred; nondeterministic Buchi accepted).
struct SpecSide {
  LtlPtr formula;
  std::shared_ptr<const OmegaAutomaton> automaton;

  bool isFormula() const { return formula != nullptr; }
};

SpecSide sideOf(LtlPtr f);
SpecSide sideOf(OmegaAutomaton a);

// A secret, optionally guarded by a trigger: hiding is required only on
// inputs whose every observation-consistent computation satisfies the trigger.
struct SecretSpec {
  SpecSide secret;
  std::optional<SpecSide> trigger;
};

enum class ObserverMode { Plain, KnowsSpec, KnowsTransducer };

struct PrivacyProblem {
  SignalTable table;
  SpecSide spec;
  std::vector<SecretSpec> secrets;
  int budget = 0;
  ObserverMode observer = ObserverMode::Plain;
};

// Diagnostics attached to a solution: for one sampled input, variant
// computations witnessing both secret values (absent when the secret's
// trigger escape applies instead).
struct SecretWitness {
  LassoWord input;
  std::optional<LassoWord> plus;
  std::optional<LassoWord> minus;
};

struct PrivacySolution {
  Letter hideMask = 0;
  Transducer transducer;
  std::vector<SecretWitness> witnesses;  // one per secret
};

struct SynthOptions {
  int parallel = 1;  // candidate hide-sets evaluated concurrently
  // optional trace of tried hide-sets and whether the game was won
  std::vector<std::pair<Letter, bool>>* candidateLog = nullptr;
};

// --- building blocks ---------------------------------------------------------

// NBW for the side's language / its complement; `table` must match.
OmegaAutomaton sideNbw(const SpecSide& s, const SignalTable& table);
OmegaAutomaton sideNegNbw(const SpecSide& s, const SignalTable& table);
// Total deterministic parity automaton for the side's language.
OmegaAutomaton sideDpw(const SpecSide& s, const SignalTable& table);

// NBW accepting computations on which the single secret stays ambiguous to an
// observer of the visible signals: noise(L_notTrigger) | (noise(L_secret) &
// noise(L_notSecret)); the first disjunct drops for unconditional secrets.
OmegaAutomaton secretHideNbw(const SecretSpec& s, const SignalTable& table, Letter h);

// NBW for "spec holds and every secret stays ambiguous" (spec conjunct
// skipped when `spec` is null in the pointer sense is not supported; pass
// sideOf(ltlTrue()) for no spec).
OmegaAutomaton buildPrivacyMonitor(const SpecSide& spec,
                                   const std::vector<SecretSpec>& secrets,
                                   const SignalTable& table, Letter h);

// Determinized monitor (total, max-even parity). When the spec is a
// deterministic Buchi automaton only the secrets are determinized and the
// spec is multiplied in afterwards.
OmegaAutomaton buildPrivacyDpw(const SpecSide& spec,
                               const std::vector<SecretSpec>& secrets,
                               const SignalTable& table, Letter h);

// Inclusion-maximal hide-sets of cost <= b, ordered by descending size then
// lexicographically by signal declaration order.
std::vector<Letter> enumerateHideSets(const SignalTable& table, int b);

// --- synthesis / checking ----------------------------------------------------

struct HideSearch {
  Letter hideMask = 0;
  Transducer transducer;
};

// Shared search loop: try each candidate hide-set against the given monitor
// builder, solve the realizability game, extract a transducer; then greedily
// drop signals (declaration order) while the game stays won. `parallel`
// candidates are evaluated concurrently; the first success in candidate
// order wins.
std::optional<HideSearch> searchHideSets(
    const SignalTable& table, int budget, int parallel,
    const std::function<OmegaAutomaton(Letter)>& monitorDpw,
    std::vector<std::pair<Letter, bool>>* candidateLog = nullptr);

// Plain realizability (no secrets).
std::optional<Transducer> synthesizePlain(const SpecSide& spec, const SignalTable& table);

// Full pipeline for the plain observer; nullopt = unrealizable.
std::optional<PrivacySolution> synthesizeWithPrivacy(const PrivacyProblem& p,
                                                     const SynthOptions& opts = {});

struct HideVerdict {
  bool hidden = false;
  std::optional<LassoWord> revealingInput;  // set when !hidden
};

// Does every computation of t keep the secret ambiguous?
HideVerdict checkHides(const Transducer& t, const SecretSpec& s, Letter h);

// Witness computations for one secret on one concrete computation of t.
SecretWitness sampleWitness(const Transducer& t, const SecretSpec& s, Letter h);

}  // namespace hush
