#include "hush/closed.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hush/ops.hpp"
#include "hush/privacy.hpp"

namespace hush {

Graph parseGraph(const std::string& text) {
  std::istringstream in(text);
  Graph g;
  int m = 0;
  if (!(in >> g.vertexCount >> m)) throw std::runtime_error("graph: missing 'n m' header");
  if (g.vertexCount < 0 || m < 0) throw std::runtime_error("graph: negative counts");
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::runtime_error("graph: truncated edge list");
    if (u < 0 || v < 0 || u >= g.vertexCount || v >= g.vertexCount)
      throw std::runtime_error("graph: endpoint out of range");
    if (u == v) throw std::runtime_error("graph: self-loop");
    g.edges.emplace_back(u, v);
  }
  return g;
}

std::optional<LassoWitness> closedRealizable(const OmegaAutomaton& spec,
                                             const OmegaAutomaton& secret, Letter h) {
  if (spec.table.inputMask() != 0)
    throw std::runtime_error("closedRealizable: table has input signals");
  if (!secret.isDeterministic())
    throw std::runtime_error("closedRealizable: secret automaton must be deterministic");
  const SignalTable& table = spec.table;
  OmegaAutomaton specNbw = sideNbw(sideOf(spec), table);
  OmegaAutomaton pos = applyNoise(sideNbw(sideOf(secret), table), h);
  OmegaAutomaton neg = applyNoise(sideNegNbw(sideOf(secret), table), h);
  std::vector<const OmegaAutomaton*> parts{&specNbw, &pos, &neg};
  auto wit = isEmptyWitness(intersectNbw(parts));
  if (!wit) return std::nullopt;
  return LassoWitness{canonicalizeLasso(wit->word)};
}

std::optional<ClosedSolution> closedSearch(const OmegaAutomaton& spec,
                                           const OmegaAutomaton& secret,
                                           const SignalTable& table, int b) {
  for (Letter h : enumerateHideSets(table, b))
    if (auto wit = closedRealizable(spec, secret, h)) return ClosedSolution{h, wit->word};
  return std::nullopt;
}

Transducer lassoToClosedTransducer(const LassoWord& word, const SignalTable& table) {
  if (table.inputMask() != 0)
    throw std::runtime_error("closed transducer needs a table without inputs");
  LassoWord w = canonicalizeLasso(word);
  int N = w.length();
  Transducer t;
  t.table = table;
  t.inputLetters = {0};
  for (int p = 0; p < N; ++p) {
    t.output.push_back(w.at(p));
    t.next.push_back({w.succ(p)});
  }
  if (w.prefix.empty()) {
    t.initial = N - 1;  // its successor is position 0
  } else {
    t.output.push_back(0);
    t.next.push_back({0});
    t.initial = N;
  }
  t.validate();
  return t;
}

// --- fixtures -----------------------------------------------------------------

namespace {

Letter edgeMask(const Graph& g, int i) {
  return (Letter(1) << g.edges[i].first) | (Letter(1) << g.edges[i].second);
}

SignalTable vertexTable(const Graph& g) {
  SignalTable t;
  for (int v = 0; v < g.vertexCount; ++v)
    t.add("v" + std::to_string(v), SignalKind::Output, 1);
  return t;
}

void checkGraph(const Graph& g) {
  if (g.edges.empty()) throw std::runtime_error("fixture needs at least one edge");
  for (auto [u, v] : g.edges)
    if (u < 0 || v < 0 || u >= g.vertexCount || v >= g.vertexCount || u == v)
      throw std::runtime_error("fixture: malformed edge");
}

// Deterministic Buchi automaton for words whose i-th letter touches edge i,
// with an accepting sink afterwards (partial: non-touching letters die).
OmegaAutomaton coverSecret(const Graph& g, const SignalTable& table) {
  int m = int(g.edges.size());
  OmegaAutomaton a;
  a.table = table;
  a.kind = AccKind::Buchi;
  a.initial = 0;
  int L = a.numLetters();
  a.trans.assign(m + 1, std::vector<std::vector<int>>(L));
  for (int i = 0; i < m; ++i) {
    Letter e = edgeMask(g, i);
    for (int l = 0; l < L; ++l)
      if (Letter(l) & e) a.trans[i][l].push_back(i + 1);
  }
  for (int l = 0; l < L; ++l) a.trans[m][l].push_back(m);
  a.inSet.assign(1, std::vector<char>(m + 1, 0));
  a.inSet[0][m] = 1;
  return a;
}

}  // namespace

ClosedFixture vertexCoverFixture(const Graph& g) {
  checkGraph(g);
  ClosedFixture f;
  f.table = vertexTable(g);
  OmegaAutomaton spec;
  spec.table = f.table;
  spec.kind = AccKind::Buchi;
  spec.initial = 0;
  int L = spec.numLetters();
  spec.trans.assign(2, std::vector<std::vector<int>>(L));
  for (int l = 0; l < L; ++l) {
    spec.trans[0][l].push_back(l == 0 ? 0 : 1);
    spec.trans[1][l].push_back(1);
  }
  spec.inSet.assign(1, std::vector<char>(2, 0));
  spec.inSet[0][0] = 1;
  f.spec = std::move(spec);
  f.secret = coverSecret(g, f.table);
  return f;
}

ClosedFixture vertexCoverKnowledgeFixture(const Graph& g) {
  checkGraph(g);
  ClosedFixture f;
  f.table = vertexTable(g);
  int m = int(g.edges.size());
  // states: 0 = start, 1..m = cover-encoding progress, m+1 = empty-forever,
  // m+2 = dead; the branch between the two languages happens at position 0
  OmegaAutomaton spec;
  spec.table = f.table;
  spec.kind = AccKind::Buchi;
  spec.initial = 0;
  int L = spec.numLetters();
  int allEmpty = m + 1;
  int dead = m + 2;
  spec.trans.assign(m + 3, std::vector<std::vector<int>>(L));
  for (int l = 0; l < L; ++l)
    spec.trans[0][l].push_back(l == 0 ? allEmpty
                                      : ((Letter(l) & edgeMask(g, 0)) ? 1 : dead));
  for (int i = 1; i < m; ++i)
    for (int l = 0; l < L; ++l)
      spec.trans[i][l].push_back((Letter(l) & edgeMask(g, i)) ? i + 1 : dead);
  for (int l = 0; l < L; ++l) {
    spec.trans[m][l].push_back(m);
    spec.trans[allEmpty][l].push_back(l == 0 ? allEmpty : dead);
    spec.trans[dead][l].push_back(dead);
  }
  spec.inSet.assign(1, std::vector<char>(m + 3, 0));
  spec.inSet[0][allEmpty] = 1;
  spec.inSet[0][m] = 1;
  f.spec = std::move(spec);
  f.secret = coverSecret(g, f.table);
  return f;
}

HardnessFixture hidingHardnessFixture(const OmegaAutomaton& a) {
  if (a.kind != AccKind::Buchi)
    throw std::runtime_error("hidingHardnessFixture expects a Buchi automaton");
  a.validate();
  int n = a.numStates();
  int sink = n;          // rejecting sink, reachable from the initial state
  int states = n + 1;
  int bits = 0;
  while ((1 << bits) < states) ++bits;

  HardnessFixture f;
  f.table = a.table;
  for (int i = 0; i < f.table.size(); ++i) f.table.setCost(i, 1);
  int base = f.table.size();
  for (int i = 0; i < bits; ++i) {
    int idx = f.table.add("__aux_t" + std::to_string(i), SignalKind::Output, 0);
    f.hiddenMask |= Letter(1) << idx;
  }
  Letter origMask = (Letter(1) << base) - 1;

  OmegaAutomaton d;
  d.table = f.table;
  d.kind = AccKind::Buchi;
  d.initial = a.initial;
  int L = d.numLetters();
  d.trans.assign(states, std::vector<std::vector<int>>(L));
  auto inDelta = [&](int q, Letter sigma, int s) {
    if (q == sink) return s == sink;
    if (q == a.initial && s == sink) return true;
    if (s == sink) return false;
    const auto& succ = a.trans[q][sigma];
    return std::find(succ.begin(), succ.end(), s) != succ.end();
  };
  for (int q = 0; q < states; ++q) {
    for (int l = 0; l < L; ++l) {
      Letter sigma = Letter(l) & origMask;
      int s = int(Letter(l) >> base);
      if (s < states && inDelta(q, sigma, s)) d.trans[q][l].push_back(s);
    }
  }
  d.inSet.assign(1, std::vector<char>(states, 0));
  for (int q = 0; q < n; ++q) d.inSet[0][q] = a.inSet[0][q];
  f.secret = std::move(d);
  return f;
}

}  // namespace hush
