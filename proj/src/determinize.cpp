#include "hush/determinize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hush/ops.hpp"

namespace hush {

namespace {

using Bits = std::vector<uint64_t>;

Bits makeBits(int n) { return Bits((n + 63) / 64, 0); }
void setBit(Bits& b, int i) { b[i / 64] |= uint64_t(1) << (i % 64); }
bool anyBit(const Bits& b) {
  for (uint64_t w : b)
    if (w) return true;
  return false;
}
void orInto(Bits& a, const Bits& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}
void andInto(Bits& a, const Bits& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
}
void subInto(Bits& a, const Bits& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] &= ~b[i];
}

struct TreeNode {
  int parent;  // index into the node list, -1 for the root
  Bits label;
  auto operator<=>(const TreeNode&) const = default;
};

using Tree = std::vector<TreeNode>;

std::string treeName(const Tree& t, int nStates) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) {
    s += "[" + std::to_string(i);
    if (t[i].parent >= 0) s += "<-" + std::to_string(t[i].parent);
    s += ":{";
    bool first = true;
    for (int q = 0; q < nStates; ++q)
      if (t[i].label[q / 64] & (uint64_t(1) << (q % 64))) {
        if (!first) s += ",";
        s += std::to_string(q);
        first = false;
      }
    s += "}]";
  }
  if (t.empty()) s = "[empty]";
  return s;
}

}  // namespace

OmegaAutomaton determinize(const OmegaAutomaton& nbwIn) {
  if (nbwIn.kind != AccKind::Buchi)
    throw std::runtime_error("determinize expects a Buchi automaton");
  OmegaAutomaton nbw = reduceNbw(nbwIn);
  int n = nbw.numStates();
  int L = nbw.numLetters();
  const int cap = 2 * n;  // node positions never exceed this within a step
  // Seniority order on events: a death at position f emits 2(cap+1-f)+1, a
  // green event at position e emits 2(cap+1-e); more senior positions emit
  // strictly larger ranks and a death dominates a green event at equal depth.
  auto oddPr = [&](int f) { return 2 * (cap + 1 - f) + 1; };
  auto evenPr = [&](int e) { return 2 * (cap + 1 - e); };

  // successor bitsets and the acceptance bitset
  std::vector<std::vector<Bits>> succBits(n, std::vector<Bits>(L, makeBits(n)));
  for (int q = 0; q < n; ++q)
    for (int l = 0; l < L; ++l)
      for (int t : nbw.trans[q][l]) setBit(succBits[q][l], t);
  Bits alpha = makeBits(n);
  for (int q = 0; q < n; ++q)
    if (nbw.inSet[0][q]) setBit(alpha, q);

  auto forEachState = [&](const Bits& b, auto&& fn) {
    for (int q = 0; q < n; ++q)
      if (b[q / 64] & (uint64_t(1) << (q % 64))) fn(q);
  };

  // One transition of the tree structure; returns the emitted priority.
  auto step = [&](const Tree& tree, int letter, int& prio) -> Tree {
    if (tree.empty()) {
      prio = oddPr(1);
      return {};
    }
    int preN = int(tree.size());
    Tree t = tree;
    // 1. move labels
    for (auto& nd : t) {
      Bits next = makeBits(n);
      forEachState(nd.label, [&](int q) { orInto(next, succBits[q][letter]); });
      nd.label = std::move(next);
    }
    // 2. spawn a youngest child from the accepting part of each label
    for (int i = 0; i < preN; ++i) {
      Bits child = t[i].label;
      andInto(child, alpha);
      if (anyBit(child)) t.push_back({i, std::move(child)});
    }
    int m = int(t.size());
    // children lists (creation order == age order)
    std::vector<std::vector<int>> kids(m);
    for (int i = 0; i < m; ++i)
      if (t[i].parent >= 0) kids[t[i].parent].push_back(i);
    // 3. horizontal dedup: a state stays only in the oldest sibling subtree
    {
      std::vector<int> order;  // preorder from the root (index 0)
      std::vector<int> stack{0};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it)
          stack.push_back(*it);
      }
      auto subtreeSubtract = [&](int v, const Bits& taken) {
        std::vector<int> st{v};
        while (!st.empty()) {
          int u = st.back();
          st.pop_back();
          subInto(t[u].label, taken);
          for (int c : kids[u]) st.push_back(c);
        }
      };
      for (int v : order) {
        Bits taken = makeBits(n);
        for (int c : kids[v]) {
          subtreeSubtract(c, taken);
          orInto(taken, t[c].label);
        }
      }
    }
    // 4. deaths by empty label
    std::vector<char> removed(m, 0);
    int f = cap + 1, e = cap + 1;
    for (int i = 0; i < m; ++i)
      if (!anyBit(t[i].label)) {
        removed[i] = 1;
        f = std::min(f, i + 1);
      }
    // 5. vertical merge: label fully covered by children -> green, drop subtree
    for (int i = 0; i < m; ++i) {
      if (removed[i]) continue;
      Bits uni = makeBits(n);
      bool hasChild = false;
      for (int c : kids[i])
        if (!removed[c]) {
          hasChild = true;
          orInto(uni, t[c].label);
        }
      if (!hasChild) continue;
      if (uni == t[i].label) {
        e = std::min(e, i + 1);
        // remove all descendants; they count as deaths
        std::vector<int> st = kids[i];
        while (!st.empty()) {
          int u = st.back();
          st.pop_back();
          if (!removed[u]) {
            removed[u] = 1;
            f = std::min(f, u + 1);
          }
          for (int c : kids[u]) st.push_back(c);
        }
      }
    }
    // 6. rebuild survivors in order
    std::vector<int> remap(m, -1);
    Tree out;
    for (int i = 0; i < m; ++i) {
      if (removed[i]) continue;
      remap[i] = int(out.size());
      out.push_back({t[i].parent >= 0 ? remap[t[i].parent] : -1, t[i].label});
    }
    // 7. priority: the most senior event wins; deaths break ties (impossible)
    if (f > cap && e > cap)
      prio = 1;
    else if (f <= e)
      prio = oddPr(f);
    else
      prio = evenPr(e);
    return out;
  };

  // BFS over (tree, priority) states
  Tree init;
  {
    Bits l0 = makeBits(n);
    setBit(l0, nbw.initial);
    init.push_back({-1, std::move(l0)});
  }
  std::map<std::pair<Tree, int>, int> id;
  std::vector<std::pair<Tree, int>> states;
  auto getId = [&](Tree t, int pr) {
    auto key = std::make_pair(std::move(t), pr);
    auto [it, fresh] = id.emplace(key, int(states.size()));
    if (fresh) states.push_back(it->first);
    return it->second;
  };
  OmegaAutomaton d;
  d.table = nbw.table;
  d.kind = AccKind::Parity;
  d.initial = getId(init, 1);
  for (size_t s = 0; s < states.size(); ++s) {
    Tree tree = states[s].first;  // copy: states may reallocate
    d.trans.push_back(std::vector<std::vector<int>>(L));
    for (int l = 0; l < L; ++l) {
      int pr;
      Tree next = step(tree, l, pr);
      d.trans[s][l].push_back(getId(std::move(next), pr));
    }
  }
  d.rank.resize(states.size());
  d.names.resize(states.size());
  for (size_t s = 0; s < states.size(); ++s) {
    d.rank[s] = states[s].second;
    d.names[s] = treeName(states[s].first, n);
  }
  return compressRanks(quotientBisim(d));
}

}  // namespace hush
