#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hush/privacy.hpp"

namespace hush {

// Transducer with a per-state certificate: an alternative assignment to the
// hidden signals under which the secret's value flips while the visible
// signals stay as emitted.
struct CertifyingTransducer {
  Transducer transducer;
  std::vector<Letter> certificate;  // per state, subset of the hidden mask
};

// The doubled alphabet: the original table extended with one fresh output
// signal per hidden signal, carrying the alternative track.
struct CertAlphabet {
  SignalTable ext;
  Letter hiddenMask = 0;  // original hidden signals (low positions)
  Letter primedMask = 0;  // their copies (appended positions)
  std::vector<std::pair<int, int>> pairs;  // (original index, copy index)

  // View an extended letter as an original-alphabet letter taking the hidden
  // values from the copy track.
  Letter alternativeView(Letter l) const;
  Letter origMask() const;
  Letter toPrimed(Letter hiddenBits) const;    // hidden subset -> copy subset
  Letter fromPrimed(Letter primedBits) const;  // copy subset -> hidden subset
};

CertAlphabet certAlphabet(const SignalTable& table, Letter h);

// Universal co-Buchi automaton over the doubled alphabet accepting w joined
// with an alternative hidden track w' iff w satisfies the spec and w, w'
// disagree on the secret.
OmegaAutomaton buildCertUcw(const SpecSide& spec, const SpecSide& secret,
                            const SignalTable& table, Letter h);

enum class CertEngine { Safraless, Complete };

// Synthesis over the extended outputs (real outputs plus the copy track),
// split back into (transducer, certificate). The Safraless engine iterates a
// bounded-visit safety reduction and falls back to the complete
// determinization route at the cutoff.
std::optional<CertifyingTransducer> synthesizeCertified(
    const SpecSide& spec, const SpecSide& secret, const SignalTable& table, Letter h,
    CertEngine engine = CertEngine::Safraless);

struct CertVerdict {
  bool certifying = false;
  std::optional<LassoWord> failingInput;
};

CertVerdict checkCertifying(const CertifyingTransducer& ct, const SpecSide& spec,
                            const SpecSide& secret, const SignalTable& table, Letter h);

// Transducer text format plus one `certificate <comma-list or ->` line per state.
std::string printCertifyingTransducer(const CertifyingTransducer& ct);
CertifyingTransducer parseCertifyingTransducer(const std::string& text);

}  // namespace hush
