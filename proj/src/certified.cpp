#include "hush/certified.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hush/determinize.hpp"
#include "hush/ops.hpp"

namespace hush {

Letter CertAlphabet::origMask() const {
  return (Letter(1) << (ext.size() - int(pairs.size()))) - 1;
}

Letter CertAlphabet::alternativeView(Letter l) const {
  Letter v = l & origMask() & ~hiddenMask;
  for (auto [o, p] : pairs)
    if (l & (Letter(1) << p)) v |= Letter(1) << o;
  return v;
}

Letter CertAlphabet::toPrimed(Letter hiddenBits) const {
  Letter v = 0;
  for (auto [o, p] : pairs)
    if (hiddenBits & (Letter(1) << o)) v |= Letter(1) << p;
  return v;
}

Letter CertAlphabet::fromPrimed(Letter primedBits) const {
  Letter v = 0;
  for (auto [o, p] : pairs)
    if (primedBits & (Letter(1) << p)) v |= Letter(1) << o;
  return v;
}

CertAlphabet certAlphabet(const SignalTable& table, Letter h) {
  if (h & ~((Letter(1) << table.size()) - 1))
    throw std::runtime_error("hidden mask outside the table");
  CertAlphabet al;
  al.ext = table;
  al.hiddenMask = h;
  for (int i = 0; i < table.size(); ++i) {
    if (!(h & (Letter(1) << i))) continue;
    int p = al.ext.add(table.signal(i).name + "__p", SignalKind::Output, 0);
    al.pairs.emplace_back(i, p);
    al.primedMask |= Letter(1) << p;
  }
  return al;
}

namespace {

template <class Proj>
OmegaAutomaton liftToExt(const OmegaAutomaton& a, const SignalTable& ext, Proj proj) {
  OmegaAutomaton r = a;
  r.table = ext;
  int L = 1 << ext.size();
  for (int q = 0; q < a.numStates(); ++q) {
    std::vector<std::vector<int>> row(L);
    for (int l = 0; l < L; ++l) row[l] = a.trans[q][proj(Letter(l))];
    r.trans[q] = std::move(row);
  }
  return r;
}

}  // namespace

OmegaAutomaton buildCertUcw(const SpecSide& spec, const SpecSide& secret,
                            const SignalTable& table, Letter h) {
  CertAlphabet al = certAlphabet(table, h);
  auto real = [&](Letter l) { return l & al.origMask(); };
  auto alt = [&](Letter l) { return al.alternativeView(l); };
  OmegaAutomaton posO = sideNbw(secret, table);
  OmegaAutomaton negO = sideNegNbw(secret, table);
  OmegaAutomaton agreePos = reduceNbw(degeneralize(
      intersectNbw(liftToExt(posO, al.ext, real), liftToExt(posO, al.ext, alt))));
  OmegaAutomaton agreeNeg = reduceNbw(degeneralize(
      intersectNbw(liftToExt(negO, al.ext, real), liftToExt(negO, al.ext, alt))));
  OmegaAutomaton specNeg = liftToExt(sideNegNbw(spec, table), al.ext, real);
  OmegaAutomaton notTheta =
      reduceNbw(unionNbw(specNeg, unionNbw(agreePos, agreeNeg)));
  return dualize(notTheta);
}

namespace {

struct TooLarge {};

// Deterministic safety view of the universal co-Buchi automaton: track, per
// run, the maximal number of rejecting-state visits; exceed k and the word is
// declared lost. Sound for any k; complete only in the limit.
OmegaAutomaton countingSafetyDpw(const OmegaAutomaton& ucw, int k, size_t cap) {
  int n = ucw.numStates();
  int L = ucw.numLetters();
  const auto& rej = ucw.inSet[0];
  using Counts = std::vector<int>;  // -1 = absent
  std::map<Counts, int> id;
  std::vector<Counts> states;
  auto getId = [&](const Counts& c) {
    auto [it, fresh] = id.emplace(c, int(states.size()));
    if (fresh) {
      states.push_back(c);
      if (states.size() > cap) throw TooLarge{};
    }
    return it->second;
  };
  Counts init(n, -1);
  init[ucw.initial] = rej[ucw.initial] ? 1 : 0;
  bool initBad = init[ucw.initial] > k;

  OmegaAutomaton d;
  d.table = ucw.table;
  d.kind = AccKind::Parity;
  std::vector<std::vector<int>> trans;  // [state][letter] single target
  int start = initBad ? -1 : getId(init);
  for (size_t q = 0; q < states.size(); ++q) {
    trans.emplace_back(L, -1);
    Counts cur = states[q];
    for (int l = 0; l < L; ++l) {
      Counts nxt(n, -1);
      bool bad = false;
      for (int s = 0; s < n && !bad; ++s) {
        if (cur[s] < 0) continue;
        for (int t : ucw.trans[s][l]) {
          int c = cur[s] + (rej[t] ? 1 : 0);
          if (c > k) {
            bad = true;
            break;
          }
          nxt[t] = std::max(nxt[t], c);
        }
      }
      trans[q][l] = bad ? -1 : getId(nxt);
    }
  }
  int m = int(states.size());
  int trap = m;
  d.initial = initBad ? trap : start;
  d.trans.assign(m + 1, std::vector<std::vector<int>>(L));
  for (int q = 0; q < m; ++q)
    for (int l = 0; l < L; ++l)
      d.trans[q][l].push_back(trans[q][l] < 0 ? trap : trans[q][l]);
  for (int l = 0; l < L; ++l) d.trans[trap][l].push_back(trap);
  d.rank.assign(m + 1, 2);
  d.rank[trap] = 1;
  return d;
}

std::optional<Transducer> gameSynth(const OmegaAutomaton& dpw) {
  RealizabilityGame rg = realizabilityGame(dpw);
  GameSolution sol = solveParity(rg.game);
  return extractTransducer(dpw, rg, sol);
}

CertifyingTransducer splitTracks(const Transducer& extT, const CertAlphabet& al,
                                 const SignalTable& table) {
  CertifyingTransducer ct;
  Transducer t;
  t.table = table;
  t.initial = extT.initial;
  t.next = extT.next;
  t.inputLetters = table.inputLetters();
  for (Letter o : extT.output) {
    t.output.push_back(o & table.outputMask());
    ct.certificate.push_back(al.fromPrimed(o & al.primedMask));
  }
  t.validate();
  ct.transducer = std::move(t);
  return ct;
}

Transducer joinTracks(const CertifyingTransducer& ct, const CertAlphabet& al) {
  const Transducer& t = ct.transducer;
  if (int(ct.certificate.size()) != t.numStates())
    throw std::runtime_error("certificate size does not match the state count");
  Transducer e;
  e.table = al.ext;
  e.initial = t.initial;
  e.next = t.next;
  e.inputLetters = al.ext.inputLetters();
  for (int s = 0; s < t.numStates(); ++s) {
    if (ct.certificate[s] & ~al.hiddenMask)
      throw std::runtime_error("certificate uses non-hidden signals");
    e.output.push_back(t.output[s] | al.toPrimed(ct.certificate[s]));
  }
  e.validate();
  return e;
}

}  // namespace

std::optional<CertifyingTransducer> synthesizeCertified(const SpecSide& spec,
                                                        const SpecSide& secret,
                                                        const SignalTable& table, Letter h,
                                                        CertEngine engine) {
  CertAlphabet al = certAlphabet(table, h);
  OmegaAutomaton ucw = buildCertUcw(spec, secret, table, h);
  std::optional<CertifyingTransducer> result;
  bool decided = false;
  if (engine == CertEngine::Safraless) {
    int cutoff = 2 * std::max(1, ucw.numStates());
    for (int k = 0; k <= cutoff; ++k) {
      OmegaAutomaton dpw;
      try {
        dpw = countingSafetyDpw(ucw, k, 100000);
      } catch (TooLarge&) {
        break;
      }
      if (auto extT = gameSynth(dpw)) {
        result = splitTracks(*extT, al, table);
        decided = true;
        break;
      }
    }
  }
  if (!decided) {
    // complete route: the UCW language is the complement of its dual NBW
    OmegaAutomaton dpw = complementDpw(determinize(dualize(ucw)));
    if (auto extT = gameSynth(dpw)) result = splitTracks(*extT, al, table);
  }
  if (result) {
    auto v = checkCertifying(*result, spec, secret, table, h);
    if (!v.certifying)
      throw std::logic_error("synthesizeCertified returned a non-certifying machine");
  }
  return result;
}

CertVerdict checkCertifying(const CertifyingTransducer& ct, const SpecSide& spec,
                            const SpecSide& secret, const SignalTable& table, Letter h) {
  CertAlphabet al = certAlphabet(table, h);
  Transducer extT = joinTracks(ct, al);
  OmegaAutomaton gen = transducerAutomaton(extT);
  OmegaAutomaton bad = dualize(buildCertUcw(spec, secret, table, h));
  auto wit = isEmptyWitness(intersectNbw(gen, bad));
  if (!wit) return {true, std::nullopt};
  return {false, canonicalizeLasso(mapLasso(wit->word, table.inputMask()))};
}

std::string printCertifyingTransducer(const CertifyingTransducer& ct) {
  std::istringstream in(printTransducer(ct.transducer));
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    out << line << "\n";
    if (line.rfind("state ", 0) == 0) {
      int sid = std::stoi(line.substr(6));
      std::string names = ct.transducer.table.maskToNames(ct.certificate[sid]);
      std::string spaced;
      for (char c : names) {
        spaced += c;
        if (c == ',') spaced += ' ';
      }
      out << "  certificate " << (spaced.empty() ? "-" : spaced) << "\n";
    }
  }
  return out.str();
}

CertifyingTransducer parseCertifyingTransducer(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::ostringstream rest;
  std::vector<std::pair<int, std::string>> certLines;  // (state id, list)
  int lastState = -1;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    size_t b = trimmed.find_first_not_of(" \t\r");
    trimmed = b == std::string::npos ? "" : trimmed.substr(b);
    if (trimmed.rfind("state ", 0) == 0) lastState = std::stoi(trimmed.substr(6));
    if (trimmed.rfind("certificate", 0) == 0) {
      if (lastState < 0)
        throw std::runtime_error("certificate line before any state block");
      certLines.emplace_back(lastState, trimmed.substr(11));
      continue;
    }
    rest << line << "\n";
  }
  CertifyingTransducer ct;
  ct.transducer = parseTransducer(rest.str());
  ct.certificate.assign(ct.transducer.numStates(), 0);
  std::vector<char> seen(ct.transducer.numStates(), 0);
  for (auto& [sid, list] : certLines) {
    if (sid >= ct.transducer.numStates() || seen[sid])
      throw std::runtime_error("bad certificate line placement");
    seen[sid] = 1;
    Letter mask = 0;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) return;
      if (cur == "-") {
        cur.clear();
        return;
      }
      auto idx = ct.transducer.table.find(cur);
      if (!idx) throw std::runtime_error("unknown signal in certificate: " + cur);
      mask |= Letter(1) << *idx;
      cur.clear();
    };
    for (char c : list) {
      if (c == ',' || isspace((unsigned char)c))
        flush();
      else
        cur += c;
    }
    flush();
    ct.certificate[sid] = mask;
  }
  for (char c : seen)
    if (!c) throw std::runtime_error("missing certificate line for some state");
  return ct;
}

}  // namespace hush
