#include "hush/game.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hush/ops.hpp"

namespace hush {

ParityGame totalizeGame(const ParityGame& g) {
  bool need = false;
  for (const auto& s : g.succ)
    if (s.empty()) need = true;
  if (!need) return g;
  ParityGame r = g;
  // one losing sink per player: a dead-end loses for its owner
  int sink0 = -1, sink1 = -1;
  auto getSink = [&](int player) {
    int& sink = player == 0 ? sink0 : sink1;
    if (sink == -1) {
      sink = r.numVertices();
      r.owner.push_back(player);
      // self-loop whose rank makes `player` lose: odd for player 0, even for 1
      r.rank.push_back(player == 0 ? 1 : 2);
      r.succ.push_back({sink});
    }
    return sink;
  };
  int n = g.numVertices();
  for (int v = 0; v < n; ++v)
    if (r.succ[v].empty()) {
      int sink = getSink(r.owner[v]);  // may reallocate r.succ
      r.succ[v].push_back(sink);
    }
  return r;
}

namespace {

// Attractor of `target` for player p within `alive`. Fills strat[v] for
// p-owned vertices attracted via an edge (not for vertices inside target).
std::vector<char> attractor(const ParityGame& g, int p, const std::vector<char>& alive,
                            const std::vector<char>& target, std::vector<int>& strat) {
  int n = g.numVertices();
  std::vector<char> in(n, 0);
  std::vector<int> cnt(n, 0);  // for opponent vertices: alive successors not in attr
  // predecessor lists restricted to alive
  std::vector<std::vector<int>> pred(n);
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (int u : g.succ[v])
      if (alive[u]) {
        pred[u].push_back(v);
        ++cnt[v];
      }
  }
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (target[v]) {
      in[v] = 1;
      queue.push_back(v);
    } else if (g.owner[v] != p && cnt[v] == 0) {
      // opponent vertex with no alive successors: attracted vacuously
      in[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : pred[u]) {
      if (in[v]) continue;
      if (g.owner[v] == p) {
        in[v] = 1;
        strat[v] = u;
        queue.push_back(v);
      } else {
        if (--cnt[v] == 0) {
          in[v] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  return in;
}

struct Solver {
  const ParityGame& g;
  std::vector<int> winner;
  std::vector<int> strategy;

  explicit Solver(const ParityGame& game)
      : g(game), winner(game.numVertices(), -1), strategy(game.numVertices(), -1) {}

  void solve(std::vector<char> alive) {
    int n = g.numVertices();
    int d = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v]) d = std::max(d, g.rank[v]);
    if (d < 0) return;
    int p = d % 2 == 0 ? 0 : 1;
    int opp = 1 - p;
    std::vector<char> top(n, 0);
    for (int v = 0; v < n; ++v) top[v] = alive[v] && g.rank[v] == d;
    std::vector<int> astrat(n, -1);
    std::vector<char> A = attractor(g, p, alive, top, astrat);
    std::vector<char> rest(n, 0);
    bool restAny = false;
    for (int v = 0; v < n; ++v) {
      rest[v] = alive[v] && !A[v];
      restAny = restAny || rest[v];
    }
    if (restAny) solve(rest);
    bool oppWinsSome = false;
    for (int v = 0; v < n; ++v)
      if (rest[v] && winner[v] == opp) oppWinsSome = true;
    if (!oppWinsSome) {
      for (int v = 0; v < n; ++v) {
        if (!alive[v] || !A[v]) continue;
        winner[v] = p;
        if (g.owner[v] == p) {
          if (top[v]) {
            // any alive successor works: the whole subgame is won by p
            strategy[v] = -1;
            for (int u : g.succ[v])
              if (alive[u]) {
                strategy[v] = u;
                break;
              }
          } else {
            strategy[v] = astrat[v];
          }
        } else {
          strategy[v] = -1;
        }
      }
      // rest keeps its recursive results (all won by p)
      return;
    }
    std::vector<char> W(n, 0);
    for (int v = 0; v < n; ++v) W[v] = rest[v] && winner[v] == opp;
    std::vector<int> bstrat(n, -1);
    std::vector<char> B = attractor(g, opp, alive, W, bstrat);
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || !B[v]) continue;
      winner[v] = opp;
      if (g.owner[v] == opp) {
        if (W[v]) {
          // keep the subgame strategy computed by the recursion
        } else {
          strategy[v] = bstrat[v];
        }
      } else {
        strategy[v] = -1;
      }
    }
    std::vector<char> rest2(n, 0);
    bool any2 = false;
    for (int v = 0; v < n; ++v) {
      rest2[v] = alive[v] && !B[v];
      any2 = any2 || rest2[v];
    }
    if (any2) solve(rest2);
  }
};

}  // namespace

GameSolution solveParity(const ParityGame& g) {
  int n = g.numVertices();
  for (int v = 0; v < n; ++v) {
    if (g.succ[v].empty()) throw std::runtime_error("solveParity: game not total");
    if (g.rank[v] < 1) throw std::runtime_error("solveParity: ranks must be >= 1");
  }
  Solver s(g);
  std::vector<char> all(n, 1);
  s.solve(all);
  GameSolution sol{std::move(s.winner), std::move(s.strategy)};
  // sanity: every vertex classified, winners have a strategy choice
  for (int v = 0; v < n; ++v) {
    if (sol.winner[v] < 0) throw std::logic_error("solveParity: unclassified vertex");
    if (g.owner[v] == sol.winner[v] && sol.strategy[v] < 0)
      throw std::logic_error("solveParity: missing strategy");
  }
  return sol;
}

RealizabilityGame realizabilityGame(const OmegaAutomaton& dpw) {
  if (dpw.kind != AccKind::Parity || !dpw.isDeterministic() || !dpw.isTotal())
    throw std::runtime_error("realizabilityGame expects a total deterministic parity automaton");
  RealizabilityGame rg;
  rg.inputLetters = dpw.table.inputLetters();
  rg.outputLetters = dpw.table.outputLetters();
  rg.dpwStates = dpw.numStates();
  int n = dpw.numStates();
  int I = int(rg.inputLetters.size());
  ParityGame& g = rg.game;
  int total = n + n * I;
  g.owner.assign(total, 0);
  g.rank.assign(total, 1);
  g.succ.assign(total, {});
  for (int q = 0; q < n; ++q) {
    g.owner[q] = 1;  // environment picks the input
    g.rank[q] = dpw.rank[q];
    for (int ii = 0; ii < I; ++ii) g.succ[q].push_back(n + q * I + ii);
  }
  for (int q = 0; q < n; ++q) {
    for (int ii = 0; ii < I; ++ii) {
      int v = n + q * I + ii;
      g.owner[v] = 0;  // system picks the output
      g.rank[v] = 1;
      for (Letter o : rg.outputLetters) {
        Letter l = rg.inputLetters[ii] | o;
        g.succ[v].push_back(dpw.trans[q][l][0]);
      }
      std::sort(g.succ[v].begin(), g.succ[v].end());
      g.succ[v].erase(std::unique(g.succ[v].begin(), g.succ[v].end()), g.succ[v].end());
    }
  }
  g.initial = dpw.initial;
  return rg;
}

}  // namespace hush
