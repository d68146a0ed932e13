#include "hush/observer.hpp"

#include <algorithm>
#include <stdexcept>

#include "hush/closed.hpp"
#include "hush/determinize.hpp"
#include "hush/ops.hpp"

namespace hush {

namespace {

OmegaAutomaton conjunct(std::vector<OmegaAutomaton> parts) {
  if (parts.size() == 1) return std::move(parts[0]);
  std::vector<const OmegaAutomaton*> ptrs;
  for (const auto& a : parts) ptrs.push_back(&a);
  return reduceNbw(degeneralize(intersectNbw(ptrs)));
}

// noise(spec & side): the observer only considers spec-satisfying variants.
OmegaAutomaton noisyWithSpec(const OmegaAutomaton& specNbw, const OmegaAutomaton& side,
                             Letter h) {
  return applyNoise(reduceNbw(degeneralize(intersectNbw(specNbw, side))), h);
}

OmegaAutomaton knowSecretNbw(const OmegaAutomaton& specNbw, const SecretSpec& s,
                             const SignalTable& table, Letter h) {
  OmegaAutomaton pos = noisyWithSpec(specNbw, sideNbw(s.secret, table), h);
  OmegaAutomaton neg = noisyWithSpec(specNbw, sideNegNbw(s.secret, table), h);
  OmegaAutomaton both = reduceNbw(degeneralize(intersectNbw(pos, neg)));
  if (!s.trigger) return both;
  OmegaAutomaton escape = noisyWithSpec(specNbw, sideNegNbw(*s.trigger, table), h);
  return reduceNbw(unionNbw(escape, both));
}

}  // namespace

OmegaAutomaton buildKnowSpecMonitor(const SpecSide& spec,
                                    const std::vector<SecretSpec>& secrets,
                                    const SignalTable& table, Letter h) {
  OmegaAutomaton specNbw = sideNbw(spec, table);
  std::vector<OmegaAutomaton> parts;
  for (const auto& s : secrets) parts.push_back(knowSecretNbw(specNbw, s, table, h));
  parts.push_back(std::move(specNbw));
  return conjunct(std::move(parts));
}

OmegaAutomaton buildKnowSpecDpw(const SpecSide& spec,
                                const std::vector<SecretSpec>& secrets,
                                const SignalTable& table, Letter h) {
  return determinize(buildKnowSpecMonitor(spec, secrets, table, h));
}

std::optional<PrivacySolution> synthesizeKnowSpec(const PrivacyProblem& p,
                                                  const SynthOptions& opts) {
  if (p.secrets.empty()) throw std::runtime_error("at least one secret required");
  if (p.budget < 0) throw std::runtime_error("negative budget");

  PrivacySolution sol;
  bool won = false;
  if (p.table.inputMask() == 0) {
    // closed fast path: the system just picks a computation — nonemptiness of
    // the monitor suffices, no determinization.
    auto nonempty = [&](Letter h) {
      return isEmptyWitness(buildKnowSpecMonitor(p.spec, p.secrets, p.table, h));
    };
    for (Letter h : enumerateHideSets(p.table, p.budget)) {
      auto wit = nonempty(h);
      if (opts.candidateLog) opts.candidateLog->emplace_back(h, wit.has_value());
      if (wit) {
        for (int i = 0; i < p.table.size(); ++i) {
          Letter bit = Letter(1) << i;
          if (!(h & bit)) continue;
          if (auto w2 = nonempty(h & ~bit)) {
            h &= ~bit;
            wit = w2;
          }
        }
        sol.hideMask = h;
        sol.transducer = lassoToClosedTransducer(wit->word, p.table);
        won = true;
        break;
      }
    }
  } else {
    auto monitor = [&](Letter h) { return buildKnowSpecDpw(p.spec, p.secrets, p.table, h); };
    if (auto found =
            searchHideSets(p.table, p.budget, opts.parallel, monitor, opts.candidateLog)) {
      sol.hideMask = found->hideMask;
      sol.transducer = std::move(found->transducer);
      won = true;
    }
  }
  if (!won) return std::nullopt;

  if (p.table.costOf(sol.hideMask) > p.budget)
    throw std::logic_error("synthesis returned an over-budget hide-set");
  if (containedInDpw(transducerAutomaton(sol.transducer), sideDpw(p.spec, p.table)))
    throw std::logic_error("synthesis returned a spec-violating transducer");
  for (const auto& s : p.secrets) {
    if (!checkHidesKnowSpec(sol.transducer, p.spec, s, sol.hideMask).hidden)
      throw std::logic_error("synthesis returned a transducer failing the hiding re-check");
    sol.witnesses.push_back(sampleWitness(sol.transducer, s, sol.hideMask));
  }
  return sol;
}

HideVerdict checkHidesKnowSpec(const Transducer& t, const SpecSide& spec,
                               const SecretSpec& s, Letter h) {
  t.validate();
  OmegaAutomaton dpw = buildKnowSpecDpw(spec, {s}, t.table, h);
  auto cex = containedInDpw(transducerAutomaton(t), dpw);
  if (!cex) return {true, std::nullopt};
  return {false, canonicalizeLasso(mapLasso(*cex, t.table.inputMask()))};
}

namespace {

// Universal co-Buchi automaton over the input alphabet accepting the inputs
// on which every visibly-consistent computation of t has an accepting run of
// `branch` (an NBW over the full alphabet; its accepting states become the
// co-Buchi set, so universal acceptance = all branches visit them finitely =
// no variant computation accepted by `branch`... inverted below by dualizing).
// Concretely: state (s1, s2, q) tracks t on the real input, t on a
// noise-equivalent input with visibly-equal outputs, and a run of `branch` on
// that variant computation.
OmegaAutomaton observerUcw(const Transducer& t, const OmegaAutomaton& branch, Letter h,
                           const SignalTable& tIn,
                           const std::vector<Letter>& inCompress) {
  int nt = t.numStates();
  int nb = branch.numStates();
  auto code = [&](int s1, int s2, int q) { return (s1 * nt + s2) * nb + q; };
  int total = nt * nt * nb;
  int L = 1 << tIn.size();
  OmegaAutomaton u;
  u.table = tIn;
  u.kind = AccKind::CoBuchi;
  u.initial = code(t.initial, t.initial, branch.initial);
  u.trans.assign(total, std::vector<std::vector<int>>(L));
  u.inSet.assign(1, std::vector<char>(total, 0));
  for (int s1 = 0; s1 < nt; ++s1)
    for (int s2 = 0; s2 < nt; ++s2)
      for (int q = 0; q < nb; ++q) {
        u.inSet[0][code(s1, s2, q)] = branch.inSet[0][q];
        for (size_t ii = 0; ii < t.inputLetters.size(); ++ii) {
          Letter i = t.inputLetters[ii];
          int n1 = t.next[s1][ii];
          auto& out = u.trans[code(s1, s2, q)][inCompress[ii]];
          for (size_t jj = 0; jj < t.inputLetters.size(); ++jj) {
            Letter iv = t.inputLetters[jj];
            if (hideBits(iv, h) != hideBits(i, h)) continue;
            int n2 = t.next[s2][jj];
            if (hideBits(t.output[n2], h) != hideBits(t.output[n1], h)) continue;
            for (int qn : branch.trans[q][iv | t.output[n2]])
              out.push_back(code(n1, n2, qn));
          }
          std::sort(out.begin(), out.end());
          out.erase(std::unique(out.begin(), out.end()), out.end());
        }
      }
  return restrictReachable(u);
}

// L(ucw) nonempty? (universal reading). Returns a word in the language.
std::optional<LassoWord> ucwNonemptyWitness(const OmegaAutomaton& ucw) {
  OmegaAutomaton dual = dualize(ucw);  // NBW; ucw nonempty iff dual not universal
  OmegaAutomaton comp = complementDpw(determinize(dual));
  auto wit = isEmptyWitness(comp);
  if (!wit) return std::nullopt;
  return canonicalizeLasso(wit->word);
}

}  // namespace

HideVerdict checkHidesKnowingTransducer(const Transducer& t, const SecretSpec& s,
                                        Letter h) {
  t.validate();
  if (s.trigger)
    throw std::runtime_error("transducer-knowing check supports unconditional secrets only");
  SignalTable tIn;
  std::vector<int> inIdx = t.table.inputs();
  for (int i : inIdx) tIn.add(t.table.signal(i).name, SignalKind::Input, t.table.cost(i));
  std::vector<Letter> inCompress(t.inputLetters.size(), 0);
  for (size_t ii = 0; ii < t.inputLetters.size(); ++ii)
    for (size_t b = 0; b < inIdx.size(); ++b)
      if (t.inputLetters[ii] & (Letter(1) << inIdx[b])) inCompress[ii] |= Letter(1) << b;

  auto expand = [&](const LassoWord& w) {
    auto lift = [&](Letter l) {
      Letter r = 0;
      for (size_t b = 0; b < inIdx.size(); ++b)
        if (l & (Letter(1) << b)) r |= Letter(1) << inIdx[b];
      return r;
    };
    LassoWord r;
    for (Letter l : w.prefix) r.prefix.push_back(lift(l));
    for (Letter l : w.loop) r.loop.push_back(lift(l));
    return r;
  };

  // "surely true": every consistent variant computation satisfies the secret,
  // i.e. no variant has an accepting run of the negated-secret NBW.
  OmegaAutomaton sureTrue = observerUcw(t, sideNegNbw(s.secret, t.table), h, tIn, inCompress);
  if (auto w = ucwNonemptyWitness(sureTrue)) return {false, expand(*w)};
  OmegaAutomaton sureFalse = observerUcw(t, sideNbw(s.secret, t.table), h, tIn, inCompress);
  if (auto w = ucwNonemptyWitness(sureFalse)) return {false, expand(*w)};
  return {true, std::nullopt};
}

ObserverReport compareObserverStrength(const Transducer& t, const SecretSpec& s,
                                       Letter h, const SpecSide& spec) {
  ObserverReport r;
  r.plain = checkHides(t, s, h).hidden;
  r.knowsSpec = checkHidesKnowSpec(t, spec, s, h).hidden;
  r.knowsTransducer = checkHidesKnowingTransducer(t, s, h).hidden;
  r.realizesSpec =
      !containedInDpw(transducerAutomaton(t), sideDpw(spec, t.table)).has_value();
  if (r.realizesSpec) {
    if ((r.knowsTransducer && !r.knowsSpec) || (r.knowsSpec && !r.plain))
      throw std::logic_error("observer strength chain violated");
  }
  return r;
}

}  // namespace hush
