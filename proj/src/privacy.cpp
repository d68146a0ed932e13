#include "hush/privacy.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

#include "hush/determinize.hpp"
#include "hush/ops.hpp"
#include "hush/translate.hpp"

namespace hush {

SpecSide sideOf(LtlPtr f) {
  SpecSide s;
  s.formula = std::move(f);
  return s;
}

SpecSide sideOf(OmegaAutomaton a) {
  SpecSide s;
  s.automaton = std::make_shared<const OmegaAutomaton>(std::move(a));
  return s;
}

namespace {

void checkTable(const OmegaAutomaton& a, const SignalTable& table) {
  if (!(a.table == table))
    throw std::runtime_error("automaton is over a different signal table");
}

// Any Buchi-like or parity automaton -> total deterministic parity.
OmegaAutomaton toDetParity(const OmegaAutomaton& a) {
  switch (a.kind) {
    case AccKind::Parity:
      if (a.isDeterministic()) return totalize(a);
      return determinize(dpwToNbw(a));
    case AccKind::Buchi:
      if (a.isDeterministic()) return dbwToDpw(totalize(a));
      return determinize(a);
    case AccKind::GenBuchi:
      return determinize(degeneralize(a));
    default:
      throw std::runtime_error("co-Buchi input not supported here");
  }
}

}  // namespace

OmegaAutomaton sideNbw(const SpecSide& s, const SignalTable& table) {
  if (s.isFormula()) return ltlToNbw(s.formula, table);
  if (!s.automaton) throw std::runtime_error("empty specification side");
  const OmegaAutomaton& a = *s.automaton;
  checkTable(a, table);
  switch (a.kind) {
    case AccKind::Buchi:
      return reduceNbw(a);
    case AccKind::GenBuchi:
      return reduceNbw(degeneralize(a));
    case AccKind::Parity:
      return reduceNbw(dpwToNbw(a));
    default:
      throw std::runtime_error("co-Buchi input not supported here");
  }
}

OmegaAutomaton sideNegNbw(const SpecSide& s, const SignalTable& table) {
  if (s.isFormula()) return ltlNegToNbw(s.formula, table);
  if (!s.automaton) throw std::runtime_error("empty specification side");
  checkTable(*s.automaton, table);
  return reduceNbw(dpwToNbw(complementDpw(toDetParity(*s.automaton))));
}

OmegaAutomaton sideDpw(const SpecSide& s, const SignalTable& table) {
  if (s.isFormula()) return determinize(ltlToNbw(s.formula, table));
  if (!s.automaton) throw std::runtime_error("empty specification side");
  checkTable(*s.automaton, table);
  return toDetParity(*s.automaton);
}

OmegaAutomaton secretHideNbw(const SecretSpec& s, const SignalTable& table, Letter h) {
  OmegaAutomaton pos = applyNoise(sideNbw(s.secret, table), h);
  OmegaAutomaton neg = applyNoise(sideNegNbw(s.secret, table), h);
  OmegaAutomaton both = reduceNbw(degeneralize(intersectNbw(pos, neg)));
  if (!s.trigger) return both;
  OmegaAutomaton escape = applyNoise(sideNegNbw(*s.trigger, table), h);
  return reduceNbw(unionNbw(escape, both));
}

namespace {

OmegaAutomaton conjunctMonitor(std::vector<OmegaAutomaton> parts) {
  if (parts.size() == 1) return std::move(parts[0]);
  std::vector<const OmegaAutomaton*> ptrs;
  for (const auto& a : parts) ptrs.push_back(&a);
  return reduceNbw(degeneralize(intersectNbw(ptrs)));
}

OmegaAutomaton secretsMonitor(const std::vector<SecretSpec>& secrets,
                              const SignalTable& table, Letter h) {
  std::vector<OmegaAutomaton> parts;
  for (const auto& s : secrets) parts.push_back(secretHideNbw(s, table, h));
  return conjunctMonitor(std::move(parts));
}

}  // namespace

OmegaAutomaton buildPrivacyMonitor(const SpecSide& spec,
                                   const std::vector<SecretSpec>& secrets,
                                   const SignalTable& table, Letter h) {
  std::vector<OmegaAutomaton> parts;
  parts.push_back(sideNbw(spec, table));
  for (const auto& s : secrets) parts.push_back(secretHideNbw(s, table, h));
  return conjunctMonitor(std::move(parts));
}

OmegaAutomaton buildPrivacyDpw(const SpecSide& spec,
                               const std::vector<SecretSpec>& secrets,
                               const SignalTable& table, Letter h) {
  // Deterministic-Buchi spec: determinize only the secrets, then multiply the
  // spec in afterwards (size exponential in the secrets, polynomial in the spec).
  if (!spec.isFormula() && spec.automaton && !secrets.empty() &&
      spec.automaton->kind == AccKind::Buchi && spec.automaton->isDeterministic()) {
    checkTable(*spec.automaton, table);
    OmegaAutomaton d = determinize(secretsMonitor(secrets, table, h));
    return totalize(compressRanks(intersectDpwDbw(d, totalize(*spec.automaton))));
  }
  return determinize(buildPrivacyMonitor(spec, secrets, table, h));
}

std::vector<Letter> enumerateHideSets(const SignalTable& table, int b) {
  if (b < 0) throw std::runtime_error("negative budget");
  int n = table.size();
  Letter all = (Letter(1) << n) - 1;
  std::vector<Letter> maximal;
  for (Letter hs = 0; hs <= all; ++hs) {
    if (table.costOf(hs) > b) continue;
    bool max = true;
    for (int i = 0; i < n && max; ++i)
      if (!(hs & (Letter(1) << i)) && table.costOf(hs | (Letter(1) << i)) <= b)
        max = false;
    if (max) maximal.push_back(hs);
  }
  auto lexLess = [](Letter a, Letter c) {
    while (a && c) {
      int ia = std::countr_zero(a), ic = std::countr_zero(c);
      if (ia != ic) return ia < ic;
      a &= a - 1;
      c &= c - 1;
    }
    return a == 0 && c != 0;
  };
  std::sort(maximal.begin(), maximal.end(), [&](Letter a, Letter c) {
    int pa = std::popcount(a), pc = std::popcount(c);
    if (pa != pc) return pa > pc;
    return lexLess(a, c);
  });
  return maximal;
}

namespace {

std::optional<Transducer> tryHide(Letter h,
                                  const std::function<OmegaAutomaton(Letter)>& monitorDpw) {
  OmegaAutomaton dpw = monitorDpw(h);
  RealizabilityGame rg = realizabilityGame(dpw);
  GameSolution sol = solveParity(rg.game);
  return extractTransducer(dpw, rg, sol);
}

}  // namespace

std::optional<HideSearch> searchHideSets(
    const SignalTable& table, int budget, int parallel,
    const std::function<OmegaAutomaton(Letter)>& monitorDpw,
    std::vector<std::pair<Letter, bool>>* candidateLog) {
  auto candidates = enumerateHideSets(table, budget);
  size_t k = size_t(std::max(1, parallel));
  std::optional<HideSearch> hit;
  for (size_t base = 0; base < candidates.size() && !hit; base += k) {
    size_t end = std::min(candidates.size(), base + k);
    std::vector<std::optional<Transducer>> results(end - base);
    std::vector<std::exception_ptr> errs(end - base);
    if (end - base == 1) {
      try {
        results[0] = tryHide(candidates[base], monitorDpw);
      } catch (...) {
        errs[0] = std::current_exception();
      }
    } else {
      std::vector<std::thread> pool;
      for (size_t j = base; j < end; ++j)
        pool.emplace_back([&, j] {
          try {
            results[j - base] = tryHide(candidates[j], monitorDpw);
          } catch (...) {
            errs[j - base] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
    }
    for (size_t j = base; j < end; ++j) {
      if (errs[j - base]) std::rethrow_exception(errs[j - base]);
      if (candidateLog && !hit)
        candidateLog->emplace_back(candidates[j], results[j - base].has_value());
      if (results[j - base] && !hit)
        hit = HideSearch{candidates[j], std::move(*results[j - base])};
    }
  }
  if (!hit) return std::nullopt;
  // Greedily drop signals (declaration order) while the game stays won.
  for (int i = 0; i < table.size(); ++i) {
    Letter bit = Letter(1) << i;
    if (!(hit->hideMask & bit)) continue;
    if (auto t2 = tryHide(hit->hideMask & ~bit, monitorDpw))
      hit = HideSearch{hit->hideMask & ~bit, std::move(*t2)};
  }
  return hit;
}

std::optional<Transducer> synthesizePlain(const SpecSide& spec, const SignalTable& table) {
  OmegaAutomaton dpw = sideDpw(spec, table);
  RealizabilityGame rg = realizabilityGame(dpw);
  GameSolution sol = solveParity(rg.game);
  return extractTransducer(dpw, rg, sol);
}

std::optional<PrivacySolution> synthesizeWithPrivacy(const PrivacyProblem& p,
                                                     const SynthOptions& opts) {
  if (p.observer != ObserverMode::Plain)
    throw std::runtime_error("synthesizeWithPrivacy handles the plain observer only");
  if (p.secrets.empty()) throw std::runtime_error("at least one secret required");
  if (p.budget < 0) throw std::runtime_error("negative budget");
  auto monitor = [&](Letter h) { return buildPrivacyDpw(p.spec, p.secrets, p.table, h); };
  auto found = searchHideSets(p.table, p.budget, opts.parallel, monitor, opts.candidateLog);
  if (!found) return std::nullopt;

  PrivacySolution sol;
  sol.hideMask = found->hideMask;
  sol.transducer = std::move(found->transducer);
  if (p.table.costOf(sol.hideMask) > p.budget)
    throw std::logic_error("synthesis returned an over-budget hide-set");
  if (containedInDpw(transducerAutomaton(sol.transducer), sideDpw(p.spec, p.table)))
    throw std::logic_error("synthesis returned a spec-violating transducer");
  for (const auto& s : p.secrets) {
    if (!checkHides(sol.transducer, s, sol.hideMask).hidden)
      throw std::logic_error("synthesis returned a transducer failing the hiding re-check");
    sol.witnesses.push_back(sampleWitness(sol.transducer, s, sol.hideMask));
  }
  return sol;
}

HideVerdict checkHides(const Transducer& t, const SecretSpec& s, Letter h) {
  t.validate();
  OmegaAutomaton dpw = determinize(secretHideNbw(s, t.table, h));
  auto cex = containedInDpw(transducerAutomaton(t), dpw);
  if (!cex) return {true, std::nullopt};
  return {false, canonicalizeLasso(mapLasso(*cex, t.table.inputMask()))};
}

SecretWitness sampleWitness(const Transducer& t, const SecretSpec& s, Letter h) {
  LassoWord in;
  in.loop = {0};
  LassoWord w = runTransducer(t, in);
  SecretWitness sw;
  sw.input = in;
  OmegaAutomaton noiseW = applyNoise(lassoAutomaton(t.table, w), h);
  if (auto p = isEmptyWitness(intersectNbw(noiseW, sideNbw(s.secret, t.table))))
    sw.plus = canonicalizeLasso(p->word);
  if (auto m = isEmptyWitness(intersectNbw(noiseW, sideNegNbw(s.secret, t.table))))
    sw.minus = canonicalizeLasso(m->word);
  return sw;
}

}  // namespace hush
