#include "hush/ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace hush {

OmegaAutomaton applyNoise(const OmegaAutomaton& a, Letter hiddenMask) {
  OmegaAutomaton r = a;
  auto variants = SignalTable::subLetters(hiddenMask);
  int L = a.numLetters();
  for (int q = 0; q < a.numStates(); ++q) {
    for (int l = 0; l < L; ++l) {
      Letter base = Letter(l) & ~hiddenMask;
      std::vector<int> u;
      for (Letter s : variants) {
        const auto& src = a.trans[q][base | s];
        u.insert(u.end(), src.begin(), src.end());
      }
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      r.trans[q][l] = std::move(u);
    }
  }
  return r;
}

OmegaAutomaton degeneralize(const OmegaAutomaton& a) {
  if (a.kind != AccKind::GenBuchi && a.kind != AccKind::Buchi)
    throw std::runtime_error("degeneralize expects (generalized) Buchi input");
  if (a.inSet.empty()) throw std::runtime_error("degeneralize: no acceptance sets");
  int k = int(a.inSet.size());
  int L = a.numLetters();
  OmegaAutomaton r;
  r.table = a.table;
  r.kind = AccKind::Buchi;
  std::map<std::pair<int, int>, int> id;  // (q, awaiting) -> state
  std::vector<std::pair<int, int>> states;
  auto getId = [&](int q, int i) {
    auto [it, fresh] = id.emplace(std::make_pair(q, i), int(states.size()));
    if (fresh) states.push_back({q, i});
    return it->second;
  };
  r.initial = getId(a.initial, 0);
  for (size_t s = 0; s < states.size(); ++s) {
    auto [q, i] = states[s];
    int j = a.inSet[i][q] ? (i + 1) % k : i;
    r.trans.push_back(std::vector<std::vector<int>>(L));
    for (int l = 0; l < L; ++l)
      for (int t : a.trans[q][l]) r.trans[s][l].push_back(getId(t, j));
  }
  r.inSet.assign(1, std::vector<char>(states.size(), 0));
  for (size_t s = 0; s < states.size(); ++s) {
    auto [q, i] = states[s];
    r.inSet[0][s] = (i == k - 1) && a.inSet[k - 1][q];
  }
  return r;
}

OmegaAutomaton intersectNbw(const std::vector<const OmegaAutomaton*>& parts) {
  if (parts.empty()) throw std::runtime_error("intersectNbw: no operands");
  for (const auto* p : parts) {
    if (p->kind != AccKind::Buchi)
      throw std::runtime_error("intersectNbw expects Buchi operands");
    if (!(p->table == parts[0]->table))
      throw std::runtime_error("intersectNbw: mismatched signal tables");
  }
  int m = int(parts.size());
  int L = parts[0]->numLetters();
  OmegaAutomaton r;
  r.table = parts[0]->table;
  r.kind = AccKind::GenBuchi;
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> states;
  auto getId = [&](const std::vector<int>& tup) {
    auto [it, fresh] = id.emplace(tup, int(states.size()));
    if (fresh) states.push_back(tup);
    return it->second;
  };
  std::vector<int> init(m);
  for (int i = 0; i < m; ++i) init[i] = parts[i]->initial;
  r.initial = getId(init);
  for (size_t s = 0; s < states.size(); ++s) {
    std::vector<int> tup = states[s];
    r.trans.push_back(std::vector<std::vector<int>>(L));
    for (int l = 0; l < L; ++l) {
      // cartesian product of successor sets
      std::vector<std::vector<int>> next(1, std::vector<int>{});
      bool dead = false;
      for (int i = 0; i < m && !dead; ++i) {
        const auto& succ = parts[i]->trans[tup[i]][l];
        if (succ.empty()) {
          dead = true;
          break;
        }
        std::vector<std::vector<int>> grown;
        for (const auto& partial : next)
          for (int t : succ) {
            auto e = partial;
            e.push_back(t);
            grown.push_back(std::move(e));
          }
        next = std::move(grown);
      }
      if (dead) continue;
      for (const auto& tgt : next) r.trans[s][l].push_back(getId(tgt));
      std::sort(r.trans[s][l].begin(), r.trans[s][l].end());
    }
  }
  r.inSet.assign(m, std::vector<char>(states.size(), 0));
  for (size_t s = 0; s < states.size(); ++s)
    for (int i = 0; i < m; ++i)
      r.inSet[i][s] = parts[i]->inSet[0][states[s][i]];
  return r;
}

OmegaAutomaton intersectNbw(const OmegaAutomaton& a, const OmegaAutomaton& b) {
  return intersectNbw(std::vector<const OmegaAutomaton*>{&a, &b});
}

OmegaAutomaton unionNbw(const OmegaAutomaton& a, const OmegaAutomaton& b) {
  if (a.kind != AccKind::Buchi || b.kind != AccKind::Buchi)
    throw std::runtime_error("unionNbw expects Buchi operands");
  if (!(a.table == b.table)) throw std::runtime_error("unionNbw: mismatched tables");
  int na = a.numStates(), nb = b.numStates();
  int L = a.numLetters();
  OmegaAutomaton r;
  r.table = a.table;
  r.kind = AccKind::Buchi;
  r.initial = 0;
  r.trans.assign(1 + na + nb, std::vector<std::vector<int>>(L));
  r.inSet.assign(1, std::vector<char>(1 + na + nb, 0));
  for (int l = 0; l < L; ++l) {
    for (int t : a.trans[a.initial][l]) r.trans[0][l].push_back(1 + t);
    for (int t : b.trans[b.initial][l]) r.trans[0][l].push_back(1 + na + t);
  }
  for (int q = 0; q < na; ++q) {
    for (int l = 0; l < L; ++l)
      for (int t : a.trans[q][l]) r.trans[1 + q][l].push_back(1 + t);
    r.inSet[0][1 + q] = a.inSet[0][q];
  }
  for (int q = 0; q < nb; ++q) {
    for (int l = 0; l < L; ++l)
      for (int t : b.trans[q][l]) r.trans[1 + na + q][l].push_back(1 + na + t);
    r.inSet[0][1 + na + q] = b.inSet[0][q];
  }
  return r;
}

OmegaAutomaton complementDpw(const OmegaAutomaton& d) {
  if (d.kind != AccKind::Parity) throw std::runtime_error("complementDpw expects parity");
  if (!d.isDeterministic()) throw std::runtime_error("complementDpw expects deterministic input");
  OmegaAutomaton r = totalize(d);
  for (int& rk : r.rank) rk += 1;
  return r;
}

OmegaAutomaton dpwToNbw(const OmegaAutomaton& d) {
  if (d.kind != AccKind::Parity) throw std::runtime_error("dpwToNbw expects parity");
  int n = d.numStates();
  int L = d.numLetters();
  std::vector<int> evens;
  for (int q = 0; q < n; ++q)
    if (d.rank[q] % 2 == 0) evens.push_back(d.rank[q]);
  std::sort(evens.begin(), evens.end());
  evens.erase(std::unique(evens.begin(), evens.end()), evens.end());
  int k = int(evens.size());
  OmegaAutomaton r;
  r.table = d.table;
  r.kind = AccKind::Buchi;
  r.initial = d.initial;
  int total = n + k * n;
  r.trans.assign(total, std::vector<std::vector<int>>(L));
  r.inSet.assign(1, std::vector<char>(total, 0));
  auto boundedId = [&](int ri, int q) { return n + ri * n + q; };
  for (int q = 0; q < n; ++q) {
    for (int l = 0; l < L; ++l) {
      for (int t : d.trans[q][l]) {
        r.trans[q][l].push_back(t);
        for (int ri = 0; ri < k; ++ri)
          if (d.rank[t] <= evens[ri]) r.trans[q][l].push_back(boundedId(ri, t));
      }
      std::sort(r.trans[q][l].begin(), r.trans[q][l].end());
    }
  }
  for (int ri = 0; ri < k; ++ri) {
    for (int q = 0; q < n; ++q) {
      int s = boundedId(ri, q);
      for (int l = 0; l < L; ++l)
        for (int t : d.trans[q][l])
          if (d.rank[t] <= evens[ri]) r.trans[s][l].push_back(boundedId(ri, t));
      r.inSet[0][s] = (d.rank[q] == evens[ri]);
    }
  }
  return restrictReachable(r);
}

OmegaAutomaton dualize(const OmegaAutomaton& a) {
  OmegaAutomaton r = a;
  if (a.kind == AccKind::Buchi)
    r.kind = AccKind::CoBuchi;
  else if (a.kind == AccKind::CoBuchi)
    r.kind = AccKind::Buchi;
  else
    throw std::runtime_error("dualize expects Buchi or CoBuchi");
  return r;
}

OmegaAutomaton dbwToDpw(const OmegaAutomaton& d) {
  if (d.kind != AccKind::Buchi) throw std::runtime_error("dbwToDpw expects Buchi");
  if (!d.isDeterministic()) throw std::runtime_error("dbwToDpw expects deterministic input");
  OmegaAutomaton r = d;
  r.kind = AccKind::Parity;
  r.rank.resize(d.numStates());
  for (int q = 0; q < d.numStates(); ++q) r.rank[q] = d.inSet[0][q] ? 2 : 1;
  r.inSet.clear();
  return r;
}

OmegaAutomaton compressRanks(const OmegaAutomaton& d) {
  if (d.kind != AccKind::Parity) throw std::runtime_error("compressRanks expects parity");
  std::vector<int> used = d.rank;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::map<int, int> remap;
  int prev = 0;
  for (int r : used) {
    int next = prev + 1;
    if (next % 2 != r % 2) ++next;
    remap[r] = next;
    prev = next;
  }
  OmegaAutomaton r = d;
  for (int& rk : r.rank) rk = remap[rk];
  return r;
}

OmegaAutomaton intersectDpwDbw(const OmegaAutomaton& dpwIn, const OmegaAutomaton& dbwIn) {
  if (dpwIn.kind != AccKind::Parity || dbwIn.kind != AccKind::Buchi)
    throw std::runtime_error("intersectDpwDbw expects (parity, Buchi)");
  if (!dpwIn.isDeterministic() || !dbwIn.isDeterministic())
    throw std::runtime_error("intersectDpwDbw expects deterministic inputs");
  if (!(dpwIn.table == dbwIn.table))
    throw std::runtime_error("intersectDpwDbw: mismatched tables");
  OmegaAutomaton A = totalize(dpwIn);
  OmegaAutomaton B = totalize(dbwIn);
  int L = A.numLetters();
  OmegaAutomaton r;
  r.table = A.table;
  r.kind = AccKind::Parity;
  std::map<std::tuple<int, int, int>, int> id;
  std::vector<std::tuple<int, int, int>> states;
  auto getId = [&](int p, int q, int m) {
    auto [it, fresh] = id.emplace(std::make_tuple(p, q, m), int(states.size()));
    if (fresh) states.push_back({p, q, m});
    return it->second;
  };
  r.initial = getId(A.initial, B.initial, A.rank[A.initial]);
  for (size_t s = 0; s < states.size(); ++s) {
    auto [p, q, m] = states[s];
    r.trans.push_back(std::vector<std::vector<int>>(L));
    for (int l = 0; l < L; ++l) {
      int p2 = A.trans[p][l][0];
      int q2 = B.trans[q][l][0];
      int m2 = B.inSet[0][q] ? A.rank[p2] : std::max(m, A.rank[p2]);
      r.trans[s][l].push_back(getId(p2, q2, m2));
    }
  }
  r.rank.resize(states.size());
  for (size_t s = 0; s < states.size(); ++s) {
    auto [p, q, m] = states[s];
    r.rank[s] = B.inSet[0][q] ? m : 1;
  }
  return compressRanks(r);
}

OmegaAutomaton lassoAutomaton(const SignalTable& t, const LassoWord& w) {
  if (w.loop.empty()) throw std::runtime_error("lasso with empty loop");
  int N = w.length();
  OmegaAutomaton r;
  r.table = t;
  r.kind = AccKind::Buchi;
  r.initial = 0;
  int L = r.numLetters();
  r.trans.assign(N, std::vector<std::vector<int>>(L));
  for (int pos = 0; pos < N; ++pos) r.trans[pos][w.at(pos)].push_back(w.succ(pos));
  r.inSet.assign(1, std::vector<char>(N, 1));
  return r;
}

// Product of a nondeterministic Buchi automaton with a deterministic total
// parity automaton; result is a nondeterministic parity automaton whose
// language is the intersection.
OmegaAutomaton productNbwDetParity(const OmegaAutomaton& nbw, const OmegaAutomaton& dparIn) {
  if (nbw.kind != AccKind::Buchi) throw std::runtime_error("productNbwDetParity: Buchi expected");
  if (dparIn.kind != AccKind::Parity || !dparIn.isDeterministic())
    throw std::runtime_error("productNbwDetParity: deterministic parity expected");
  OmegaAutomaton D = totalize(dparIn);
  int L = nbw.numLetters();
  OmegaAutomaton r;
  r.table = nbw.table;
  r.kind = AccKind::Parity;
  std::map<std::tuple<int, int, int>, int> id;
  std::vector<std::tuple<int, int, int>> states;
  auto getId = [&](int q, int p, int m) {
    auto [it, fresh] = id.emplace(std::make_tuple(q, p, m), int(states.size()));
    if (fresh) states.push_back({q, p, m});
    return it->second;
  };
  r.initial = getId(nbw.initial, D.initial, D.rank[D.initial]);
  for (size_t s = 0; s < states.size(); ++s) {
    auto [q, p, m] = states[s];
    r.trans.push_back(std::vector<std::vector<int>>(L));
    for (int l = 0; l < L; ++l) {
      int p2 = D.trans[p][l][0];
      for (int t : nbw.trans[q][l]) {
        int m2 = nbw.inSet[0][q] ? D.rank[p2] : std::max(m, D.rank[p2]);
        r.trans[s][l].push_back(getId(t, p2, m2));
      }
      std::sort(r.trans[s][l].begin(), r.trans[s][l].end());
    }
  }
  r.rank.resize(states.size());
  for (size_t s = 0; s < states.size(); ++s) {
    auto [q, p, m] = states[s];
    r.rank[s] = nbw.inSet[0][q] ? m : 1;
  }
  return r;
}

std::optional<LassoWord> containedInDpw(const OmegaAutomaton& a, const OmegaAutomaton& dpw) {
  OmegaAutomaton nbw = a.kind == AccKind::GenBuchi ? degeneralize(a) : a;
  if (nbw.kind != AccKind::Buchi)
    throw std::runtime_error("containedInDpw expects (generalized) Buchi lhs");
  OmegaAutomaton comp = complementDpw(dpw);
  OmegaAutomaton prod = productNbwDetParity(nbw, comp);
  auto wit = isEmptyWitness(prod);
  if (!wit) return std::nullopt;
  return wit->word;
}

}  // namespace hush
