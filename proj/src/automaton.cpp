#include "hush/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace hush {

bool OmegaAutomaton::isDeterministic() const {
  for (const auto& row : trans)
    for (const auto& succ : row)
      if (succ.size() > 1) return false;
  return true;
}

bool OmegaAutomaton::isTotal() const {
  for (const auto& row : trans)
    for (const auto& succ : row)
      if (succ.empty()) return false;
  return true;
}

void OmegaAutomaton::validate() const {
  int n = numStates();
  int L = numLetters();
  if (n == 0) throw std::runtime_error("automaton has no states");
  if (initial < 0 || initial >= n) throw std::runtime_error("bad initial state");
  for (const auto& row : trans) {
    if (int(row.size()) != L) throw std::runtime_error("bad transition row width");
    for (const auto& succ : row)
      for (int s : succ)
        if (s < 0 || s >= n) throw std::runtime_error("transition target out of range");
  }
  switch (kind) {
    case AccKind::Buchi:
    case AccKind::CoBuchi:
      if (inSet.size() != 1 || int(inSet[0].size()) != n)
        throw std::runtime_error("Buchi/CoBuchi needs exactly one acceptance set");
      break;
    case AccKind::GenBuchi:
      if (inSet.empty()) throw std::runtime_error("GenBuchi needs >= 1 acceptance set");
      for (const auto& s : inSet)
        if (int(s.size()) != n) throw std::runtime_error("bad acceptance set width");
      break;
    case AccKind::Parity:
      if (int(rank.size()) != n) throw std::runtime_error("bad rank vector");
      for (int r : rank)
        if (r < 1) throw std::runtime_error("parity ranks must be >= 1");
      break;
  }
}

OmegaAutomaton emptyAutomaton(const SignalTable& t, AccKind kind) {
  OmegaAutomaton a;
  a.table = t;
  a.initial = 0;
  a.trans.assign(1, std::vector<std::vector<int>>(size_t(1) << t.size()));
  a.kind = kind;
  switch (kind) {
    case AccKind::Buchi:
    case AccKind::GenBuchi:
      a.inSet.assign(1, std::vector<char>(1, 0));
      break;
    case AccKind::CoBuchi:
      // sink in the co-Buchi set: the (non-existent) runs aside, any run
      // stuck here would be rejecting
      a.inSet.assign(1, std::vector<char>(1, 1));
      break;
    case AccKind::Parity:
      a.rank.assign(1, 1);
      break;
  }
  return a;
}

OmegaAutomaton totalize(const OmegaAutomaton& a) {
  if (a.isTotal()) return a;
  OmegaAutomaton r = a;
  int sink = r.numStates();
  int L = r.numLetters();
  r.trans.push_back(std::vector<std::vector<int>>(L, std::vector<int>{sink}));
  for (int q = 0; q < sink; ++q)
    for (int l = 0; l < L; ++l)
      if (r.trans[q][l].empty()) r.trans[q][l].push_back(sink);
  switch (r.kind) {
    case AccKind::Buchi:
    case AccKind::GenBuchi:
      for (auto& s : r.inSet) s.push_back(0);
      break;
    case AccKind::CoBuchi:
      r.inSet[0].push_back(1);  // visited forever -> rejecting
      break;
    case AccKind::Parity:
      r.rank.push_back(1);
      break;
  }
  if (!r.names.empty()) r.names.push_back("sink");
  return r;
}

namespace {

std::vector<int> reachableStates(const OmegaAutomaton& a) {
  std::vector<char> seen(a.numStates(), 0);
  std::deque<int> q{a.initial};
  seen[a.initial] = 1;
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    for (const auto& succ : a.trans[s])
      for (int t : succ)
        if (!seen[t]) {
          seen[t] = 1;
          q.push_back(t);
        }
  }
  std::vector<int> r;
  for (int i = 0; i < a.numStates(); ++i)
    if (seen[i]) r.push_back(i);
  return r;
}

OmegaAutomaton restrictTo(const OmegaAutomaton& a, const std::vector<int>& keep) {
  std::vector<int> remap(a.numStates(), -1);
  for (size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = int(i);
  OmegaAutomaton r;
  r.table = a.table;
  r.kind = a.kind;
  r.initial = remap[a.initial];
  int L = a.numLetters();
  r.trans.assign(keep.size(), std::vector<std::vector<int>>(L));
  for (size_t i = 0; i < keep.size(); ++i)
    for (int l = 0; l < L; ++l)
      for (int t : a.trans[keep[i]][l])
        if (remap[t] >= 0) r.trans[i][l].push_back(remap[t]);
  if (a.kind == AccKind::Parity) {
    r.rank.resize(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) r.rank[i] = a.rank[keep[i]];
  } else {
    r.inSet.assign(a.inSet.size(), std::vector<char>(keep.size()));
    for (size_t s = 0; s < a.inSet.size(); ++s)
      for (size_t i = 0; i < keep.size(); ++i) r.inSet[s][i] = a.inSet[s][keep[i]];
  }
  if (!a.names.empty()) {
    r.names.resize(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) r.names[i] = a.names[keep[i]];
  }
  return r;
}

// Iterative Tarjan over an arbitrary filtered node set.
struct SccResult {
  std::vector<int> comp;   // node -> component id, -1 if filtered out
  int count = 0;
};

template <class SuccFn>
SccResult tarjan(int n, const std::vector<char>& inGraph, SuccFn succs) {
  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> onStack(n, 0);
  std::vector<int> stack;
  int next = 0;

  struct Frame {
    int v;
    size_t childIdx;
    std::vector<int> children;
  };

  for (int root = 0; root < n; ++root) {
    if (!inGraph[root] || index[root] != -1) continue;
    std::vector<Frame> frames;
    frames.push_back({root, 0, succs(root)});
    index[root] = low[root] = next++;
    stack.push_back(root);
    onStack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.childIdx < f.children.size()) {
        int w = f.children[f.childIdx++];
        if (!inGraph[w]) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          onStack[w] = 1;
          frames.push_back({w, 0, succs(w)});
        } else if (onStack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        if (low[v] == index[v]) {
          int id = res.count++;
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            onStack[w] = 0;
            res.comp[w] = id;
            if (w == v) break;
          }
        }
        frames.pop_back();
        if (!frames.empty()) {
          int p = frames.back().v;
          low[p] = std::min(low[p], low[v]);
        }
      }
    }
  }
  return res;
}

// Edge-level view of the automaton graph: (target, letter) pairs.
std::vector<std::vector<std::pair<int, Letter>>> edgeView(const OmegaAutomaton& a) {
  std::vector<std::vector<std::pair<int, Letter>>> adj(a.numStates());
  int L = a.numLetters();
  for (int q = 0; q < a.numStates(); ++q)
    for (int l = 0; l < L; ++l)
      for (int t : a.trans[q][l]) adj[q].push_back({t, Letter(l)});
  return adj;
}

// BFS path of letters from src to dst through states where ok[state] != 0.
// If requireStep, the path has >= 1 edge (useful for cycles src==dst).
std::optional<std::vector<Letter>> bfsPath(
    const std::vector<std::vector<std::pair<int, Letter>>>& adj,
    const std::vector<char>& ok, int src, int dst, bool requireStep) {
  int n = int(adj.size());
  std::vector<int> predState(n, -1);
  std::vector<Letter> predLetter(n, 0);
  std::vector<char> seen(n, 0);
  std::deque<int> q;
  if (!requireStep && src == dst) return std::vector<Letter>{};
  // start from successors of src
  for (auto [t, l] : adj[src]) {
    if (!ok[t] && t != dst) continue;
    if (t == dst) {
      return std::vector<Letter>{l};
    }
    if (!seen[t] && ok[t]) {
      seen[t] = 1;
      predState[t] = src;
      predLetter[t] = l;
      q.push_back(t);
    }
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (auto [t, l] : adj[v]) {
      if (t == dst) {
        std::vector<Letter> path;
        path.push_back(l);
        int cur = v;
        while (cur != src) {
          path.push_back(predLetter[cur]);
          cur = predState[cur];
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (ok[t] && !seen[t]) {
        seen[t] = 1;
        predState[t] = v;
        predLetter[t] = l;
        q.push_back(t);
      }
    }
  }
  return std::nullopt;
}

bool sccNontrivial(const OmegaAutomaton& a, const SccResult& scc, int id,
                   const std::vector<char>& inGraph) {
  int members = 0, self = 0;
  int L = a.numLetters();
  bool hasEdge = false;
  for (int q = 0; q < a.numStates(); ++q) {
    if (scc.comp[q] != id) continue;
    ++members;
    for (int l = 0; l < L && !hasEdge; ++l)
      for (int t : a.trans[q][l])
        if (inGraph[t] && scc.comp[t] == id) {
          hasEdge = true;
          break;
        }
    (void)self;
  }
  return members >= 2 || hasEdge;
}

// Ranks realizing Buchi / CoBuchi as max-even parity.
std::vector<int> parityView(const OmegaAutomaton& a) {
  int n = a.numStates();
  std::vector<int> r(n, 1);
  switch (a.kind) {
    case AccKind::Buchi:
      for (int q = 0; q < n; ++q) r[q] = a.inSet[0][q] ? 2 : 1;
      break;
    case AccKind::CoBuchi:
      for (int q = 0; q < n; ++q) r[q] = a.inSet[0][q] ? 3 : 2;
      break;
    case AccKind::Parity:
      r = a.rank;
      break;
    case AccKind::GenBuchi:
      throw std::logic_error("parityView: GenBuchi handled separately");
  }
  return r;
}

}  // namespace

OmegaAutomaton restrictReachable(const OmegaAutomaton& a) {
  auto keep = reachableStates(a);
  if (int(keep.size()) == a.numStates()) return a;
  return restrictTo(a, keep);
}

// --- emptiness ---------------------------------------------------------------

std::optional<LassoWitness> isEmptyWitness(const OmegaAutomaton& a) {
  int n = a.numStates();
  std::vector<char> reach(n, 0);
  for (int s : reachableStates(a)) reach[s] = 1;
  auto adj = edgeView(a);

  auto witnessFrom = [&](int target, const std::vector<char>& cycleOk,
                         const std::vector<int>& via) -> LassoWitness {
    // prefix: initial -> target through reachable states
    auto pre = bfsPath(adj, reach, a.initial, target, false);
    // loop: target -> via[0] -> ... -> target within cycleOk
    std::vector<Letter> loop;
    int cur = target;
    for (int v : via) {
      auto seg = bfsPath(adj, cycleOk, cur, v, false);
      loop.insert(loop.end(), seg->begin(), seg->end());
      cur = v;
    }
    auto back = bfsPath(adj, cycleOk, cur, target, loop.empty());
    loop.insert(loop.end(), back->begin(), back->end());
    if (loop.empty()) {
      auto step = bfsPath(adj, cycleOk, target, target, true);
      loop = *step;
    }
    LassoWitness w;
    w.word.prefix = *pre;
    w.word.loop = loop;
    return w;
  };

  if (a.kind == AccKind::GenBuchi) {
    auto scc = tarjan(n, reach, [&](int v) {
      std::vector<int> s;
      for (auto [t, l] : adj[v]) s.push_back(t);
      return s;
    });
    for (int id = 0; id < scc.count; ++id) {
      if (!sccNontrivial(a, scc, id, reach)) continue;
      std::vector<int> via;
      bool all = true;
      for (const auto& set : a.inSet) {
        int pick = -1;
        for (int q = 0; q < n && pick < 0; ++q)
          if (scc.comp[q] == id && set[q]) pick = q;
        if (pick < 0) {
          all = false;
          break;
        }
        via.push_back(pick);
      }
      if (!all) continue;
      int target = -1;
      for (int q = 0; q < n && target < 0; ++q)
        if (scc.comp[q] == id) target = q;
      std::vector<char> cycleOk(n, 0);
      for (int q = 0; q < n; ++q) cycleOk[q] = (scc.comp[q] == id);
      return witnessFrom(target, cycleOk, via);
    }
    return std::nullopt;
  }

  std::vector<int> rk = parityView(a);
  std::vector<int> evens;
  for (int q = 0; q < n; ++q)
    if (reach[q] && rk[q] % 2 == 0) evens.push_back(rk[q]);
  std::sort(evens.begin(), evens.end());
  evens.erase(std::unique(evens.begin(), evens.end()), evens.end());
  for (int r : evens) {
    std::vector<char> sub(n, 0);
    for (int q = 0; q < n; ++q) sub[q] = reach[q] && rk[q] <= r;
    auto scc = tarjan(n, sub, [&](int v) {
      std::vector<int> s;
      for (auto [t, l] : adj[v]) s.push_back(t);
      return s;
    });
    for (int id = 0; id < scc.count; ++id) {
      int target = -1;
      for (int q = 0; q < n && target < 0; ++q)
        if (sub[q] && scc.comp[q] == id && rk[q] == r) target = q;
      if (target < 0) continue;
      if (!sccNontrivial(a, scc, id, sub)) continue;
      std::vector<char> cycleOk(n, 0);
      for (int q = 0; q < n; ++q) cycleOk[q] = sub[q] && (scc.comp[q] == id);
      return witnessFrom(target, cycleOk, {});
    }
  }
  return std::nullopt;
}

bool isEmpty(const OmegaAutomaton& a) { return !isEmptyWitness(a).has_value(); }

// --- lasso membership ---------------------------------------------------------

bool memberLasso(const OmegaAutomaton& a, const LassoWord& w) {
  if (w.loop.empty()) throw std::runtime_error("lasso with empty loop");
  int N = w.length();
  int n = a.numStates();
  // product node = pos * n + q
  int m = N * n;
  auto node = [&](int pos, int q) { return pos * n + q; };
  std::vector<std::vector<int>> adj(m);
  std::vector<char> reach(m, 0);
  std::deque<int> queue;
  int start = node(0, a.initial);
  reach[start] = 1;
  queue.push_back(start);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    int pos = v / n, q = v % n;
    Letter l = w.at(pos);
    int np = w.succ(pos);
    for (int t : a.trans[q][l]) {
      int u = node(np, t);
      adj[v].push_back(u);
      if (!reach[u]) {
        reach[u] = 1;
        queue.push_back(u);
      }
    }
  }
  auto scc = tarjan(m, reach, [&](int v) { return adj[v]; });
  auto nontrivial = [&](int id, const std::vector<char>& in) {
    for (int v = 0; v < m; ++v) {
      if (!in[v] || scc.comp[v] != id) continue;
      for (int u : adj[v])
        if (in[u] && scc.comp[u] == id) return true;
    }
    return false;
  };

  if (a.kind == AccKind::GenBuchi) {
    for (int id = 0; id < scc.count; ++id) {
      if (!nontrivial(id, reach)) continue;
      bool all = true;
      for (const auto& set : a.inSet) {
        bool found = false;
        for (int v = 0; v < m && !found; ++v)
          if (reach[v] && scc.comp[v] == id && set[v % n]) found = true;
        if (!found) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }

  std::vector<int> rk = parityView(a);
  std::vector<int> evens;
  for (int v = 0; v < m; ++v)
    if (reach[v] && rk[v % n] % 2 == 0) evens.push_back(rk[v % n]);
  std::sort(evens.begin(), evens.end());
  evens.erase(std::unique(evens.begin(), evens.end()), evens.end());
  for (int r : evens) {
    std::vector<char> sub(m, 0);
    for (int v = 0; v < m; ++v) sub[v] = reach[v] && rk[v % n] <= r;
    auto s2 = tarjan(m, sub, [&](int v) {
      std::vector<int> out;
      for (int u : adj[v])
        if (sub[u]) out.push_back(u);
      return out;
    });
    for (int id = 0; id < s2.count; ++id) {
      bool hasTop = false;
      for (int v = 0; v < m && !hasTop; ++v)
        if (sub[v] && s2.comp[v] == id && rk[v % n] == r) hasTop = true;
      if (!hasTop) continue;
      // nontrivial within sub
      for (int v = 0; v < m; ++v) {
        if (!sub[v] || s2.comp[v] != id) continue;
        for (int u : adj[v])
          if (sub[u] && s2.comp[u] == id) return true;
      }
    }
  }
  return false;
}

// --- trimming and quotients ----------------------------------------------------

OmegaAutomaton liveTrim(const OmegaAutomaton& a) {
  int n = a.numStates();
  auto adj = edgeView(a);
  std::vector<char> all(n, 1);
  std::vector<char> good(n, 0);

  auto markGoodSccs = [&](const std::vector<char>& sub,
                          auto&& sccIsGood) {
    auto scc = tarjan(n, sub, [&](int v) {
      std::vector<int> s;
      for (auto [t, l] : adj[v])
        if (sub[t]) s.push_back(t);
      return s;
    });
    for (int id = 0; id < scc.count; ++id) {
      if (!sccNontrivial(a, scc, id, sub)) continue;
      if (!sccIsGood(scc, id, sub)) continue;
      for (int q = 0; q < n; ++q)
        if (sub[q] && scc.comp[q] == id) good[q] = 1;
    }
  };

  switch (a.kind) {
    case AccKind::Buchi:
      markGoodSccs(all, [&](const SccResult& scc, int id, const std::vector<char>&) {
        for (int q = 0; q < n; ++q)
          if (scc.comp[q] == id && a.inSet[0][q]) return true;
        return false;
      });
      break;
    case AccKind::GenBuchi:
      markGoodSccs(all, [&](const SccResult& scc, int id, const std::vector<char>&) {
        for (const auto& set : a.inSet) {
          bool found = false;
          for (int q = 0; q < n && !found; ++q)
            if (scc.comp[q] == id && set[q]) found = true;
          if (!found) return false;
        }
        return true;
      });
      break;
    case AccKind::CoBuchi: {
      std::vector<char> sub(n, 0);
      for (int q = 0; q < n; ++q) sub[q] = !a.inSet[0][q];
      markGoodSccs(sub, [&](const SccResult&, int, const std::vector<char>&) { return true; });
      break;
    }
    case AccKind::Parity: {
      std::vector<int> ranks = a.rank;
      std::vector<int> evens;
      for (int q = 0; q < n; ++q)
        if (ranks[q] % 2 == 0) evens.push_back(ranks[q]);
      std::sort(evens.begin(), evens.end());
      evens.erase(std::unique(evens.begin(), evens.end()), evens.end());
      for (int r : evens) {
        std::vector<char> sub(n, 0);
        for (int q = 0; q < n; ++q) sub[q] = ranks[q] <= r;
        markGoodSccs(sub, [&](const SccResult& scc, int id, const std::vector<char>& s) {
          for (int q = 0; q < n; ++q)
            if (s[q] && scc.comp[q] == id && ranks[q] == r) return true;
          return false;
        });
      }
      break;
    }
  }

  // live = can reach a good state
  std::vector<std::vector<int>> radj(n);
  for (int q = 0; q < n; ++q)
    for (auto [t, l] : adj[q]) radj[t].push_back(q);
  std::vector<char> live(n, 0);
  std::deque<int> queue;
  for (int q = 0; q < n; ++q)
    if (good[q]) {
      live[q] = 1;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : radj[v])
      if (!live[u]) {
        live[u] = 1;
        queue.push_back(u);
      }
  }
  if (!live[a.initial]) return emptyAutomaton(a.table, a.kind);
  std::vector<int> keep;
  for (int q = 0; q < n; ++q)
    if (live[q]) keep.push_back(q);
  return restrictTo(a, keep);
}

OmegaAutomaton quotientBisim(const OmegaAutomaton& a) {
  int n = a.numStates();
  int L = a.numLetters();
  std::vector<int> cls(n, 0);
  // initial partition by acceptance signature
  {
    std::map<std::vector<int>, int> sig2cls;
    for (int q = 0; q < n; ++q) {
      std::vector<int> sig;
      if (a.kind == AccKind::Parity)
        sig.push_back(a.rank[q]);
      else
        for (const auto& set : a.inSet) sig.push_back(set[q]);
      auto [it, fresh] = sig2cls.emplace(sig, int(sig2cls.size()));
      cls[q] = it->second;
    }
  }
  for (;;) {
    std::map<std::pair<int, std::vector<std::vector<int>>>, int> key2cls;
    std::vector<int> next(n);
    for (int q = 0; q < n; ++q) {
      std::vector<std::vector<int>> succSig(L);
      for (int l = 0; l < L; ++l) {
        for (int t : a.trans[q][l]) succSig[l].push_back(cls[t]);
        std::sort(succSig[l].begin(), succSig[l].end());
        succSig[l].erase(std::unique(succSig[l].begin(), succSig[l].end()),
                         succSig[l].end());
      }
      auto key = std::make_pair(cls[q], std::move(succSig));
      auto [it, fresh] = key2cls.emplace(std::move(key), int(key2cls.size()));
      next[q] = it->second;
    }
    bool stable = true;
    for (int q = 0; q < n && stable; ++q)
      if (next[q] != cls[q]) stable = false;
    // renumber by first occurrence for determinism
    std::vector<int> ren(n, -1);
    int cnt = 0;
    for (int q = 0; q < n; ++q) {
      if (ren[next[q]] == -1) ren[next[q]] = cnt++;
      next[q] = ren[next[q]];
    }
    if (stable) {
      cls = next;
      break;
    }
    cls = next;
  }
  int m = *std::max_element(cls.begin(), cls.end()) + 1;
  if (m == n) return a;
  OmegaAutomaton r;
  r.table = a.table;
  r.kind = a.kind;
  r.initial = cls[a.initial];
  r.trans.assign(m, std::vector<std::vector<int>>(L));
  std::vector<int> rep(m, -1);
  for (int q = 0; q < n; ++q)
    if (rep[cls[q]] == -1) rep[cls[q]] = q;
  for (int c = 0; c < m; ++c) {
    int q = rep[c];
    for (int l = 0; l < L; ++l) {
      std::vector<int> s;
      for (int t : a.trans[q][l]) s.push_back(cls[t]);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      r.trans[c][l] = std::move(s);
    }
  }
  if (a.kind == AccKind::Parity) {
    r.rank.resize(m);
    for (int c = 0; c < m; ++c) r.rank[c] = a.rank[rep[c]];
  } else {
    r.inSet.assign(a.inSet.size(), std::vector<char>(m));
    for (size_t s = 0; s < a.inSet.size(); ++s)
      for (int c = 0; c < m; ++c) r.inSet[s][c] = a.inSet[s][rep[c]];
  }
  return r;
}

OmegaAutomaton reduceNbw(const OmegaAutomaton& a) {
  OmegaAutomaton r = restrictReachable(a);
  if (r.kind == AccKind::Buchi || r.kind == AccKind::GenBuchi) r = liveTrim(r);
  r = quotientBisim(r);
  r = restrictReachable(r);
  return r;
}

}  // namespace hush
