#include "hush/translate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hush/ops.hpp"

namespace hush {

namespace {

// Desugar W and R (NNF input, negations only on atoms):
//   g W h  ==  (g U h) | G g
//   g R h  ==  (h U (g & h)) | G h
LtlPtr desugar(const LtlPtr& f) {
  switch (f->op) {
    case LtlOp::True:
    case LtlOp::False:
    case LtlOp::Atom:
      return f;
    case LtlOp::Not:
      if (f->lhs->op != LtlOp::Atom)
        throw std::runtime_error("ltlToNgbw expects NNF input");
      return f;
    case LtlOp::And: return ltlAnd(desugar(f->lhs), desugar(f->rhs));
    case LtlOp::Or: return ltlOr(desugar(f->lhs), desugar(f->rhs));
    case LtlOp::Next: return ltlNext(desugar(f->lhs));
    case LtlOp::Eventually: return ltlEventually(desugar(f->lhs));
    case LtlOp::Always: return ltlAlways(desugar(f->lhs));
    case LtlOp::Until: return ltlUntil(desugar(f->lhs), desugar(f->rhs));
    case LtlOp::WeakUntil: {
      LtlPtr g = desugar(f->lhs), h = desugar(f->rhs);
      return ltlOr(ltlUntil(g, h), ltlAlways(g));
    }
    case LtlOp::Release: {
      LtlPtr g = desugar(f->lhs), h = desugar(f->rhs);
      return ltlOr(ltlUntil(h, ltlAnd(g, h)), ltlAlways(h));
    }
    default:
      throw std::runtime_error("ltlToNgbw expects NNF input (no ->, <->)");
  }
}

// Structural interning of formulas into integer ids.
struct Intern {
  struct Key {
    LtlOp op;
    int signal, lhs, rhs;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, int> ids;
  std::vector<Key> nodes;

  int get(const LtlPtr& f) {
    Key k{f->op, f->op == LtlOp::Atom ? f->signal : -1,
          f->lhs ? get(f->lhs) : -1, f->rhs ? get(f->rhs) : -1};
    auto [it, fresh] = ids.emplace(k, int(nodes.size()));
    if (fresh) nodes.push_back(k);
    return it->second;
  }
  const Key& at(int id) const { return nodes[id]; }
};

struct TableauNode {
  std::set<int> incoming;  // node ids; -1 denotes the virtual initial node
  std::set<int> old_, next;
};

}  // namespace

OmegaAutomaton ltlToNgbw(const LtlPtr& fIn, const SignalTable& table) {
  LtlPtr f = desugar(fIn);
  Intern in;
  int root = in.get(f);

  std::vector<TableauNode> nodes;
  std::map<std::pair<std::set<int>, std::set<int>>, int> nodeId;

  struct Pending {
    std::set<int> incoming, newSet, old_, next;
  };
  std::vector<Pending> work;
  work.push_back({{-1}, {root}, {}, {}});

  auto isNegOf = [&](int a, int b) {
    const auto& ka = in.at(a);
    const auto& kb = in.at(b);
    if (ka.op == LtlOp::Not && in.at(ka.lhs).op == LtlOp::Atom)
      return kb.op == LtlOp::Atom && kb.signal == in.at(ka.lhs).signal;
    if (kb.op == LtlOp::Not && in.at(kb.lhs).op == LtlOp::Atom)
      return ka.op == LtlOp::Atom && ka.signal == in.at(kb.lhs).signal;
    return false;
  };

  while (!work.empty()) {
    Pending cur = std::move(work.back());
    work.pop_back();
    if (cur.newSet.empty()) {
      auto key = std::make_pair(cur.old_, cur.next);
      auto it = nodeId.find(key);
      if (it != nodeId.end()) {
        nodes[it->second].incoming.insert(cur.incoming.begin(), cur.incoming.end());
        continue;
      }
      int id = int(nodes.size());
      nodeId.emplace(key, id);
      nodes.push_back({cur.incoming, cur.old_, cur.next});
      // successor seed
      work.push_back({{id}, cur.next, {}, {}});
      continue;
    }
    int fid = *cur.newSet.begin();
    cur.newSet.erase(cur.newSet.begin());
    const auto& k = in.at(fid);
    auto withOld = [&](Pending p) {
      p.old_.insert(fid);
      return p;
    };
    switch (k.op) {
      case LtlOp::False:
        break;  // contradiction, drop branch
      case LtlOp::True:
        work.push_back(withOld(cur));
        break;
      case LtlOp::Atom:
      case LtlOp::Not: {
        bool contra = false;
        for (int o : cur.old_)
          if (isNegOf(fid, o)) contra = true;
        if (!contra) work.push_back(withOld(cur));
        break;
      }
      case LtlOp::And: {
        Pending p = cur;
        if (!p.old_.count(k.lhs)) p.newSet.insert(k.lhs);
        if (!p.old_.count(k.rhs)) p.newSet.insert(k.rhs);
        work.push_back(withOld(p));
        break;
      }
      case LtlOp::Or: {
        Pending p1 = cur;
        if (!p1.old_.count(k.lhs)) p1.newSet.insert(k.lhs);
        work.push_back(withOld(p1));
        Pending p2 = cur;
        if (!p2.old_.count(k.rhs)) p2.newSet.insert(k.rhs);
        work.push_back(withOld(p2));
        break;
      }
      case LtlOp::Next: {
        Pending p = cur;
        p.next.insert(k.lhs);
        work.push_back(withOld(p));
        break;
      }
      case LtlOp::Until: {
        Pending p1 = cur;  // g holds now, obligation postponed
        if (!p1.old_.count(k.lhs)) p1.newSet.insert(k.lhs);
        p1.next.insert(fid);
        work.push_back(withOld(p1));
        Pending p2 = cur;  // h holds now
        if (!p2.old_.count(k.rhs)) p2.newSet.insert(k.rhs);
        work.push_back(withOld(p2));
        break;
      }
      case LtlOp::Eventually: {
        Pending p1 = cur;
        p1.next.insert(fid);
        work.push_back(withOld(p1));
        Pending p2 = cur;
        if (!p2.old_.count(k.lhs)) p2.newSet.insert(k.lhs);
        work.push_back(withOld(p2));
        break;
      }
      case LtlOp::Always: {
        Pending p = cur;
        if (!p.old_.count(k.lhs)) p.newSet.insert(k.lhs);
        p.next.insert(fid);
        work.push_back(withOld(p));
        break;
      }
      default:
        throw std::logic_error("unexpected operator in tableau");
    }
  }

  // Build the automaton: virtual initial state + one state per node.
  int n = int(nodes.size());
  OmegaAutomaton a;
  a.table = table;
  a.kind = AccKind::GenBuchi;
  a.initial = 0;
  int L = a.numLetters();
  a.trans.assign(n + 1, std::vector<std::vector<int>>(L));

  // consistent letters per node, from the literals in Old
  std::vector<std::vector<char>> ok(n, std::vector<char>(L, 1));
  for (int i = 0; i < n; ++i) {
    Letter pos = 0, negMask = 0;
    for (int o : nodes[i].old_) {
      const auto& k = in.at(o);
      if (k.op == LtlOp::Atom) pos |= Letter(1) << k.signal;
      if (k.op == LtlOp::Not) negMask |= Letter(1) << in.at(k.lhs).signal;
    }
    for (int l = 0; l < L; ++l)
      ok[i][l] = ((Letter(l) & pos) == pos) && ((Letter(l) & negMask) == 0);
  }
  for (int j = 0; j < n; ++j) {
    for (int src : nodes[j].incoming) {
      int from = src == -1 ? 0 : src + 1;
      for (int l = 0; l < L; ++l)
        if (ok[j][l]) a.trans[from][l].push_back(j + 1);
    }
  }
  for (auto& row : a.trans)
    for (auto& succ : row) {
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }

  // acceptance: one set per until/eventually formula appearing in some Old
  std::set<int> liveness;
  for (const auto& nd : nodes)
    for (int o : nd.old_) {
      LtlOp op = in.at(o).op;
      if (op == LtlOp::Until || op == LtlOp::Eventually) liveness.insert(o);
    }
  for (int fid : liveness) {
    const auto& k = in.at(fid);
    int rhs = k.op == LtlOp::Until ? k.rhs : k.lhs;
    std::vector<char> set(n + 1, 0);
    set[0] = 1;  // virtual initial
    for (int i = 0; i < n; ++i)
      set[i + 1] = !nodes[i].old_.count(fid) || nodes[i].old_.count(rhs);
    a.inSet.push_back(std::move(set));
  }
  if (a.inSet.empty()) a.inSet.assign(1, std::vector<char>(n + 1, 1));
  return a;
}

OmegaAutomaton ltlToNbw(const LtlPtr& f, const SignalTable& table) {
  return reduceNbw(degeneralize(ltlToNgbw(toNnf(f), table)));
}

OmegaAutomaton ltlNegToNbw(const LtlPtr& f, const SignalTable& table) {
  return ltlToNbw(ltlNot(f), table);
}

}  // namespace hush
