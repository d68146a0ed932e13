#include "hush/transducer.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hush {

int Transducer::inputIndex(Letter i) const {
  auto it = std::lower_bound(inputLetters.begin(), inputLetters.end(), i);
  if (it == inputLetters.end() || *it != i)
    throw std::runtime_error("letter is not an input letter");
  return int(it - inputLetters.begin());
}

void Transducer::validate() const {
  int n = numStates();
  if (n == 0) throw std::runtime_error("transducer has no states");
  if (initial < 0 || initial >= n) throw std::runtime_error("bad initial state");
  if (int(next.size()) != n) throw std::runtime_error("bad transition table");
  Letter om = table.outputMask();
  for (Letter o : output)
    if ((o & ~om) != 0) throw std::runtime_error("output label uses non-output signals");
  auto expect = table.inputLetters();
  if (inputLetters != expect) throw std::runtime_error("bad input letter enumeration");
  for (const auto& row : next) {
    if (row.size() != inputLetters.size()) throw std::runtime_error("bad transition row");
    for (int s : row)
      if (s < 0 || s >= n) throw std::runtime_error("transition target out of range");
  }
}

LassoWord runTransducer(const Transducer& t, const LassoWord& wI) {
  if (wI.loop.empty()) throw std::runtime_error("lasso with empty loop");
  Letter im = t.table.inputMask();
  for (Letter l : wI.prefix)
    if ((l & ~im) != 0) throw std::runtime_error("input word uses non-input signals");
  for (Letter l : wI.loop)
    if ((l & ~im) != 0) throw std::runtime_error("input word uses non-input signals");
  int N = wI.length();
  std::map<std::pair<int, int>, int> seen;  // (state, input position) -> step
  std::vector<Letter> letters;
  int state = t.initial;
  int pos = 0;
  for (int step = 0;; ++step) {
    auto key = std::make_pair(state, pos);
    auto it = seen.find(key);
    if (it != seen.end()) {
      LassoWord out;
      out.prefix.assign(letters.begin(), letters.begin() + it->second);
      out.loop.assign(letters.begin() + it->second, letters.end());
      return out;
    }
    seen.emplace(key, step);
    Letter i = wI.at(pos);
    state = t.next[state][t.inputIndex(i)];
    letters.push_back(i | t.output[state]);
    pos = pos + 1 < N ? pos + 1 : int(wI.prefix.size());
  }
}

std::optional<Transducer> extractTransducer(const OmegaAutomaton& dpw,
                                            const RealizabilityGame& rg,
                                            const GameSolution& sol) {
  const ParityGame& g = rg.game;
  if (sol.winner[g.initial] != 0) return std::nullopt;
  int n = rg.dpwStates;
  int I = int(rg.inputLetters.size());
  Transducer t;
  t.table = dpw.table;
  t.inputLetters = rg.inputLetters;
  std::map<std::pair<int, Letter>, int> id;  // (dpw state, emitted output) -> state
  std::vector<std::pair<int, Letter>> states;
  auto getId = [&](int q, Letter o) {
    auto [it, fresh] = id.emplace(std::make_pair(q, o), int(states.size()));
    if (fresh) states.push_back({q, o});
    return it->second;
  };
  Letter initOut = rg.outputLetters.empty() ? 0 : rg.outputLetters[0];
  t.initial = getId(dpw.initial, initOut);
  for (size_t s = 0; s < states.size(); ++s) {
    auto [q, o] = states[s];
    t.next.push_back(std::vector<int>(I, -1));
    for (int ii = 0; ii < I; ++ii) {
      int v = n + q * I + ii;
      int target = sol.strategy[v];
      if (target < 0) throw std::logic_error("extractTransducer: missing strategy");
      Letter chosen = 0;
      bool found = false;
      for (Letter out : rg.outputLetters) {
        Letter l = rg.inputLetters[ii] | out;
        if (dpw.trans[q][l][0] == target) {
          chosen = out;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("extractTransducer: strategy target unreachable");
      t.next[s][ii] = getId(target, chosen);
    }
  }
  t.output.resize(states.size());
  for (size_t s = 0; s < states.size(); ++s) t.output[s] = states[s].second;
  t.validate();
  return t;
}

OmegaAutomaton transducerAutomaton(const Transducer& t) {
  t.validate();
  OmegaAutomaton a;
  a.table = t.table;
  a.kind = AccKind::Buchi;
  a.initial = t.initial;
  int n = t.numStates();
  int L = a.numLetters();
  a.trans.assign(n, std::vector<std::vector<int>>(L));
  for (int s = 0; s < n; ++s) {
    for (size_t ii = 0; ii < t.inputLetters.size(); ++ii) {
      int to = t.next[s][ii];
      Letter l = t.inputLetters[ii] | t.output[to];
      a.trans[s][l].push_back(to);
    }
  }
  a.inSet.assign(1, std::vector<char>(n, 1));
  return a;
}

// ---------------------------------------------------------------------------
// Textual format

namespace {

std::string namesOrDash(const SignalTable& t, Letter mask) {
  std::string s = t.maskToNames(mask);
  if (s.empty()) return "-";
  // comma-space separated
  std::string out;
  for (char c : s) {
    out += c;
    if (c == ',') out += ' ';
  }
  return out;
}

std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!isspace((unsigned char)c)) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Letter parseLetterList(const std::string& s, const SignalTable& t) {
  std::string trimmed;
  for (char c : s)
    if (!isspace((unsigned char)c)) trimmed += c;
  if (trimmed == "-" || trimmed.empty()) return 0;
  Letter l = 0;
  for (const auto& name : splitList(s)) {
    auto idx = t.find(name);
    if (!idx) throw std::runtime_error("unknown signal in transducer file: " + name);
    l |= Letter(1) << *idx;
  }
  return l;
}

}  // namespace

std::string printTransducer(const Transducer& t) {
  t.validate();
  std::ostringstream o;
  o << "transducer\n";
  o << "inputs: " << namesOrDash(t.table, t.table.inputMask()) << "\n";
  o << "outputs: " << namesOrDash(t.table, t.table.outputMask()) << "\n";
  o << "states: " << t.numStates() << "\n";
  o << "initial: " << t.initial << "\n";
  for (int s = 0; s < t.numStates(); ++s) {
    o << "state " << s << " output " << namesOrDash(t.table, t.output[s]) << "\n";
    for (size_t ii = 0; ii < t.inputLetters.size(); ++ii)
      o << "  on " << namesOrDash(t.table, t.inputLetters[ii]) << " -> " << t.next[s][ii]
        << "\n";
  }
  return o.str();
}

Transducer parseTransducer(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto nextLine = [&]() -> bool {
    while (std::getline(in, line)) {
      size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      size_t e = line.find_last_not_of(" \t\r");
      line = line.substr(b, e - b + 1);
      if (!line.empty()) return true;
    }
    return false;
  };
  auto expectPrefix = [&](const std::string& p) -> std::string {
    if (line.rfind(p, 0) != 0)
      throw std::runtime_error("transducer file: expected '" + p + "' got '" + line + "'");
    return line.substr(p.size());
  };
  if (!nextLine() || line != "transducer")
    throw std::runtime_error("transducer file: missing 'transducer' header");
  if (!nextLine()) throw std::runtime_error("transducer file: truncated");
  std::string ins = expectPrefix("inputs:");
  if (!nextLine()) throw std::runtime_error("transducer file: truncated");
  std::string outs = expectPrefix("outputs:");
  SignalTable table;
  auto trimDash = [](std::vector<std::string> v) {
    if (v.size() == 1 && v[0] == "-") v.clear();
    return v;
  };
  for (const auto& nm : trimDash(splitList(ins))) table.add(nm, SignalKind::Input);
  for (const auto& nm : trimDash(splitList(outs))) table.add(nm, SignalKind::Output);
  if (!nextLine()) throw std::runtime_error("transducer file: truncated");
  int nStates = std::stoi(expectPrefix("states:"));
  if (nStates <= 0) throw std::runtime_error("transducer file: bad state count");
  if (!nextLine()) throw std::runtime_error("transducer file: truncated");
  int initial = std::stoi(expectPrefix("initial:"));

  Transducer t;
  t.table = table;
  t.initial = initial;
  t.inputLetters = table.inputLetters();
  t.output.assign(nStates, 0);
  t.next.assign(nStates, std::vector<int>(t.inputLetters.size(), -1));
  std::vector<char> defined(nStates, 0);
  bool have = nextLine();
  while (have) {
    std::string rest = expectPrefix("state ");
    size_t sp = rest.find(" output ");
    if (sp == std::string::npos)
      throw std::runtime_error("transducer file: bad state line: " + line);
    int sid = std::stoi(rest.substr(0, sp));
    if (sid < 0 || sid >= nStates) throw std::runtime_error("transducer file: state id out of range");
    if (defined[sid]) throw std::runtime_error("transducer file: duplicate state");
    defined[sid] = 1;
    t.output[sid] = parseLetterList(rest.substr(sp + 8), table);
    if ((t.output[sid] & ~table.outputMask()) != 0)
      throw std::runtime_error("transducer file: output label uses input signals");
    std::vector<char> covered(t.inputLetters.size(), 0);
    while ((have = nextLine()) && line.rfind("on ", 0) == 0) {
      std::string body = line.substr(3);
      size_t arrow = body.rfind("->");
      if (arrow == std::string::npos)
        throw std::runtime_error("transducer file: bad edge line: " + line);
      Letter il = parseLetterList(body.substr(0, arrow), table);
      if ((il & ~table.inputMask()) != 0)
        throw std::runtime_error("transducer file: edge letter uses output signals");
      int target = std::stoi(body.substr(arrow + 2));
      int idx = t.inputIndex(il);
      if (covered[idx]) throw std::runtime_error("transducer file: duplicate edge letter");
      covered[idx] = 1;
      if (target < 0 || target >= nStates)
        throw std::runtime_error("transducer file: target out of range");
      t.next[sid][idx] = target;
    }
    for (char c : covered)
      if (!c) throw std::runtime_error("transducer file: missing edge for some input letter");
  }
  for (char c : defined)
    if (!c) throw std::runtime_error("transducer file: missing state block");
  t.validate();
  return t;
}

std::string writeDotTransducer(const Transducer& t) {
  std::ostringstream o;
  o << "digraph transducer {\n  rankdir=LR;\n  init [shape=point];\n";
  for (int s = 0; s < t.numStates(); ++s)
    o << "  s" << s << " [shape=circle, label=\"" << s << "\\n/"
      << t.table.letterToString(t.output[s]) << "\"];\n";
  o << "  init -> s" << t.initial << ";\n";
  for (int s = 0; s < t.numStates(); ++s)
    for (size_t ii = 0; ii < t.inputLetters.size(); ++ii)
      o << "  s" << s << " -> s" << t.next[s][ii] << " [label=\""
        << t.table.letterToString(t.inputLetters[ii]) << "\"];\n";
  o << "}\n";
  return o.str();
}

}  // namespace hush
