#pragma once

#include <optional>

#include "hush/privacy.hpp"

namespace hush {

// Monitor for an observer who knows the specification: the noise variants
// witnessing both secret values must themselves satisfy the spec.
OmegaAutomaton buildKnowSpecMonitor(const SpecSide& spec,
                                    const std::vector<SecretSpec>& secrets,
                                    const SignalTable& table, Letter h);
OmegaAutomaton buildKnowSpecDpw(const SpecSide& spec,
                                const std::vector<SecretSpec>& secrets,
                                const SignalTable& table, Letter h);

// Synthesis loop against the spec-knowing observer. Tables without input
// signals take the closed fast path (monitor nonemptiness, no determinization).
std::optional<PrivacySolution> synthesizeKnowSpec(const PrivacyProblem& p,
                                                  const SynthOptions& opts = {});

// Checking variants for a given transducer.
HideVerdict checkHidesKnowSpec(const Transducer& t, const SpecSide& spec,
                               const SecretSpec& s, Letter h);
HideVerdict checkHidesKnowingTransducer(const Transducer& t, const SecretSpec& s,
                                        Letter h);

struct ObserverReport {
  bool plain = false;
  bool knowsSpec = false;
  bool knowsTransducer = false;
  bool realizesSpec = false;
};

// All three verdicts for one instance. When t realizes the spec the chain
// knows-transducer => knows-spec => plain must hold (checked, throws on
// violation).
ObserverReport compareObserverStrength(const Transducer& t, const SecretSpec& s,
                                       Letter h, const SpecSide& spec);

}  // namespace hush
