#include "hush/ltl.hpp"

#include <map>
#include <unordered_map>

namespace hush {

static LtlPtr mk(LtlOp op, int sig, LtlPtr a, LtlPtr b) {
  auto n = std::make_shared<LtlFormula>();
  n->op = op;
  n->signal = sig;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

LtlPtr ltlTrue() { return mk(LtlOp::True, -1, nullptr, nullptr); }
LtlPtr ltlFalse() { return mk(LtlOp::False, -1, nullptr, nullptr); }
LtlPtr ltlAtom(int s) { return mk(LtlOp::Atom, s, nullptr, nullptr); }
LtlPtr ltlNot(LtlPtr a) { return mk(LtlOp::Not, -1, std::move(a), nullptr); }
LtlPtr ltlAnd(LtlPtr a, LtlPtr b) { return mk(LtlOp::And, -1, std::move(a), std::move(b)); }
LtlPtr ltlOr(LtlPtr a, LtlPtr b) { return mk(LtlOp::Or, -1, std::move(a), std::move(b)); }
LtlPtr ltlImplies(LtlPtr a, LtlPtr b) { return mk(LtlOp::Implies, -1, std::move(a), std::move(b)); }
LtlPtr ltlIff(LtlPtr a, LtlPtr b) { return mk(LtlOp::Iff, -1, std::move(a), std::move(b)); }
LtlPtr ltlNext(LtlPtr a) { return mk(LtlOp::Next, -1, std::move(a), nullptr); }
LtlPtr ltlEventually(LtlPtr a) { return mk(LtlOp::Eventually, -1, std::move(a), nullptr); }
LtlPtr ltlAlways(LtlPtr a) { return mk(LtlOp::Always, -1, std::move(a), nullptr); }
LtlPtr ltlUntil(LtlPtr a, LtlPtr b) { return mk(LtlOp::Until, -1, std::move(a), std::move(b)); }
LtlPtr ltlWeakUntil(LtlPtr a, LtlPtr b) { return mk(LtlOp::WeakUntil, -1, std::move(a), std::move(b)); }
LtlPtr ltlRelease(LtlPtr a, LtlPtr b) { return mk(LtlOp::Release, -1, std::move(a), std::move(b)); }

int ltlSize(const LtlPtr& f) {
  if (!f) return 0;
  return 1 + ltlSize(f->lhs) + ltlSize(f->rhs);
}

bool ltlEqual(const LtlPtr& a, const LtlPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->signal != b->signal) return false;
  return ltlEqual(a->lhs, b->lhs) && ltlEqual(a->rhs, b->rhs);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok {
  End, LParen, RParen, Bang, Amp, Bar, Arrow, DArrow,
  X, F, G, U, W, R, True, False, Ident,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& s;
  size_t i = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& src) : s(src) {}

  void adv() {
    if (i < s.size() && s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  Token next() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r'))
      adv();
    int l = line, c = col;
    if (i >= s.size()) return {Tok::End, "", l, c};
    char ch = s[i];
    switch (ch) {
      case '(': adv(); return {Tok::LParen, "(", l, c};
      case ')': adv(); return {Tok::RParen, ")", l, c};
      case '!': adv(); return {Tok::Bang, "!", l, c};
      case '&': adv(); return {Tok::Amp, "&", l, c};
      case '|': adv(); return {Tok::Bar, "|", l, c};
      case '-':
        adv();
        if (i < s.size() && s[i] == '>') {
          adv();
          return {Tok::Arrow, "->", l, c};
        }
        throw LtlParseError(l, c, "expected '->'");
      case '<':
        adv();
        if (i + 1 < s.size() && s[i] == '-' && s[i + 1] == '>') {
          adv();
          adv();
          return {Tok::DArrow, "<->", l, c};
        }
        throw LtlParseError(l, c, "expected '<->'");
    }
    if (isalpha((unsigned char)ch) || ch == '_') {
      std::string id;
      while (i < s.size() && (isalnum((unsigned char)s[i]) || s[i] == '_')) {
        id += s[i];
        adv();
      }
      if (id == "true") return {Tok::True, id, l, c};
      if (id == "false") return {Tok::False, id, l, c};
      if (id.size() == 1) {
        switch (id[0]) {
          case 'X': return {Tok::X, id, l, c};
          case 'F': return {Tok::F, id, l, c};
          case 'G': return {Tok::G, id, l, c};
          case 'U': return {Tok::U, id, l, c};
          case 'W': return {Tok::W, id, l, c};
          case 'R': return {Tok::R, id, l, c};
        }
      }
      return {Tok::Ident, id, l, c};
    }
    throw LtlParseError(l, c, std::string("unexpected character '") + ch + "'");
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;
  const SignalTable& table;

  Parser(const std::string& text, const SignalTable& t) : table(t) {
    Lexer lx(text);
    for (;;) {
      Token tk = lx.next();
      toks.push_back(tk);
      if (tk.kind == Tok::End) break;
    }
  }

  const Token& peek() const { return toks[pos]; }
  Token take() { return toks[pos++]; }
  bool at(Tok k) const { return toks[pos].kind == k; }

  [[noreturn]] void fail(const std::string& msg) {
    throw LtlParseError(peek().line, peek().col, msg);
  }

  LtlPtr formula() { return iff(); }

  LtlPtr iff() {
    LtlPtr a = implies();
    while (at(Tok::DArrow)) {
      take();
      a = ltlIff(a, implies());
    }
    return a;
  }

  LtlPtr implies() {
    LtlPtr a = orExpr();
    if (at(Tok::Arrow)) {
      take();
      return ltlImplies(a, implies());  // right-assoc
    }
    return a;
  }

  LtlPtr orExpr() {
    LtlPtr a = andExpr();
    while (at(Tok::Bar)) {
      take();
      a = ltlOr(a, andExpr());
    }
    return a;
  }

  LtlPtr andExpr() {
    LtlPtr a = unary();
    while (at(Tok::Amp)) {
      take();
      a = ltlAnd(a, unary());
    }
    return a;
  }

  LtlPtr unary() {
    switch (peek().kind) {
      case Tok::Bang: take(); return ltlNot(unary());
      case Tok::X: take(); return ltlNext(unary());
      case Tok::F: take(); return ltlEventually(unary());
      case Tok::G: take(); return ltlAlways(unary());
      default: return binaryTemporalAtom();
    }
  }

  LtlPtr binaryTemporalAtom() {
    LtlPtr a = primary();
    switch (peek().kind) {
      case Tok::U: take(); return ltlUntil(a, unary());
      case Tok::W: take(); return ltlWeakUntil(a, unary());
      case Tok::R: take(); return ltlRelease(a, unary());
      default: return a;
    }
  }

  LtlPtr primary() {
    switch (peek().kind) {
      case Tok::True: take(); return ltlTrue();
      case Tok::False: take(); return ltlFalse();
      case Tok::Ident: {
        Token tk = take();
        auto idx = table.find(tk.text);
        if (!idx)
          throw LtlParseError(tk.line, tk.col, "unknown signal '" + tk.text + "'");
        return ltlAtom(*idx);
      }
      case Tok::LParen: {
        take();
        LtlPtr f = formula();
        if (!at(Tok::RParen)) fail("expected ')'");
        take();
        return f;
      }
      default:
        fail("expected formula");
    }
  }
};

}  // namespace

LtlPtr parseLtl(const std::string& text, const SignalTable& table) {
  Parser p(text, table);
  LtlPtr f = p.formula();
  if (!p.at(Tok::End)) p.fail("trailing input");
  return f;
}

// ---------------------------------------------------------------------------
// Printer: emits with the grammar's precedence, minimal parentheses.

namespace {

// precedence levels, loosest first
// 0 iff, 1 implies, 2 or, 3 and, 4 unary, 5 binary-temporal, 6 primary
int prec(LtlOp op) {
  switch (op) {
    case LtlOp::Iff: return 0;
    case LtlOp::Implies: return 1;
    case LtlOp::Or: return 2;
    case LtlOp::And: return 3;
    case LtlOp::Not:
    case LtlOp::Next:
    case LtlOp::Eventually:
    case LtlOp::Always: return 4;
    case LtlOp::Until:
    case LtlOp::WeakUntil:
    case LtlOp::Release: return 5;
    default: return 6;
  }
}

void print(const LtlPtr& f, const SignalTable& t, int minPrec, std::string& out) {
  int p = prec(f->op);
  bool paren = p < minPrec;
  if (paren) out += "(";
  switch (f->op) {
    case LtlOp::True: out += "true"; break;
    case LtlOp::False: out += "false"; break;
    case LtlOp::Atom: out += t.signal(f->signal).name; break;
    case LtlOp::Not:
      out += "!";
      print(f->lhs, t, 5, out);  // operand must be a unary-level term
      break;
    case LtlOp::Next:
      out += "X ";
      print(f->lhs, t, 5, out);
      break;
    case LtlOp::Eventually:
      out += "F ";
      print(f->lhs, t, 5, out);
      break;
    case LtlOp::Always:
      out += "G ";
      print(f->lhs, t, 5, out);
      break;
    case LtlOp::And:
      print(f->lhs, t, 3, out);
      out += " & ";
      print(f->rhs, t, 4, out);
      break;
    case LtlOp::Or:
      print(f->lhs, t, 2, out);
      out += " | ";
      print(f->rhs, t, 3, out);
      break;
    case LtlOp::Implies:
      print(f->lhs, t, 2, out);
      out += " -> ";
      print(f->rhs, t, 1, out);
      break;
    case LtlOp::Iff:
      print(f->lhs, t, 0, out);
      out += " <-> ";
      print(f->rhs, t, 1, out);
      break;
    case LtlOp::Until:
      print(f->lhs, t, 6, out);
      out += " U ";
      print(f->rhs, t, 5, out);  // rhs is a unary
      break;
    case LtlOp::WeakUntil:
      print(f->lhs, t, 6, out);
      out += " W ";
      print(f->rhs, t, 5, out);
      break;
    case LtlOp::Release:
      print(f->lhs, t, 6, out);
      out += " R ";
      print(f->rhs, t, 5, out);
      break;
  }
  if (paren) out += ")";
}

}  // namespace

std::string prettyPrint(const LtlPtr& f, const SignalTable& table) {
  std::string out;
  print(f, table, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// NNF

static LtlPtr nnf(const LtlPtr& f, bool neg);

static LtlPtr nnfNot(const LtlPtr& f) { return nnf(f, true); }

static LtlPtr nnf(const LtlPtr& f, bool neg) {
  switch (f->op) {
    case LtlOp::True: return neg ? ltlFalse() : ltlTrue();
    case LtlOp::False: return neg ? ltlTrue() : ltlFalse();
    case LtlOp::Atom: return neg ? ltlNot(ltlAtom(f->signal)) : ltlAtom(f->signal);
    case LtlOp::Not: return nnf(f->lhs, !neg);
    case LtlOp::And:
      return neg ? ltlOr(nnf(f->lhs, true), nnf(f->rhs, true))
                 : ltlAnd(nnf(f->lhs, false), nnf(f->rhs, false));
    case LtlOp::Or:
      return neg ? ltlAnd(nnf(f->lhs, true), nnf(f->rhs, true))
                 : ltlOr(nnf(f->lhs, false), nnf(f->rhs, false));
    case LtlOp::Implies:
      // a -> b == !a | b
      return neg ? ltlAnd(nnf(f->lhs, false), nnf(f->rhs, true))
                 : ltlOr(nnf(f->lhs, true), nnf(f->rhs, false));
    case LtlOp::Iff:
      // a <-> b == (a & b) | (!a & !b); negation: (a & !b) | (!a & b)
      if (neg)
        return ltlOr(ltlAnd(nnf(f->lhs, false), nnf(f->rhs, true)),
                     ltlAnd(nnf(f->lhs, true), nnf(f->rhs, false)));
      return ltlOr(ltlAnd(nnf(f->lhs, false), nnf(f->rhs, false)),
                   ltlAnd(nnf(f->lhs, true), nnf(f->rhs, true)));
    case LtlOp::Next: return ltlNext(nnf(f->lhs, neg));
    case LtlOp::Eventually:
      return neg ? ltlAlways(nnf(f->lhs, true)) : ltlEventually(nnf(f->lhs, false));
    case LtlOp::Always:
      return neg ? ltlEventually(nnf(f->lhs, true)) : ltlAlways(nnf(f->lhs, false));
    case LtlOp::Until:
      return neg ? ltlRelease(nnf(f->lhs, true), nnf(f->rhs, true))
                 : ltlUntil(nnf(f->lhs, false), nnf(f->rhs, false));
    case LtlOp::Release:
      return neg ? ltlUntil(nnf(f->lhs, true), nnf(f->rhs, true))
                 : ltlRelease(nnf(f->lhs, false), nnf(f->rhs, false));
    case LtlOp::WeakUntil:
      // a W b == (a U b) | G a ; !(a W b) == (!a R !b) & F !a
      if (neg)
        return ltlAnd(ltlRelease(nnf(f->lhs, true), nnf(f->rhs, true)),
                      ltlEventually(nnf(f->lhs, true)));
      return ltlWeakUntil(nnf(f->lhs, false), nnf(f->rhs, false));
  }
  throw std::logic_error("unreachable");
}

LtlPtr toNnf(const LtlPtr& f) { return nnf(f, false); }

// ---------------------------------------------------------------------------
// Lasso evaluation: compute truth at every position of the lasso graph.
// Least fixpoints (U, F) start from false; greatest (R, G, W) from true;
// sweep until stable (the graph is a single cycle plus a stem, so this
// converges in O(length) sweeps).

namespace {

struct Evaluator {
  const LassoWord& w;
  int n;
  std::unordered_map<const LtlFormula*, std::vector<char>> memo;

  explicit Evaluator(const LassoWord& word) : w(word), n(word.length()) {}

  const std::vector<char>& eval(const LtlPtr& f) {
    auto it = memo.find(f.get());
    if (it != memo.end()) return it->second;
    std::vector<char> v(size_t(n), 0);
    switch (f->op) {
      case LtlOp::True: std::fill(v.begin(), v.end(), 1); break;
      case LtlOp::False: break;
      case LtlOp::Atom: {
        Letter bit = Letter(1) << f->signal;
        for (int j = 0; j < n; ++j) v[j] = (w.at(j) & bit) ? 1 : 0;
        break;
      }
      case LtlOp::Not: {
        auto& a = eval(f->lhs);
        for (int j = 0; j < n; ++j) v[j] = !a[j];
        break;
      }
      case LtlOp::And: {
        auto& a = eval(f->lhs);
        auto& b = eval(f->rhs);
        for (int j = 0; j < n; ++j) v[j] = a[j] && b[j];
        break;
      }
      case LtlOp::Or: {
        auto& a = eval(f->lhs);
        auto& b = eval(f->rhs);
        for (int j = 0; j < n; ++j) v[j] = a[j] || b[j];
        break;
      }
      case LtlOp::Implies: {
        auto& a = eval(f->lhs);
        auto& b = eval(f->rhs);
        for (int j = 0; j < n; ++j) v[j] = !a[j] || b[j];
        break;
      }
      case LtlOp::Iff: {
        auto& a = eval(f->lhs);
        auto& b = eval(f->rhs);
        for (int j = 0; j < n; ++j) v[j] = a[j] == b[j];
        break;
      }
      case LtlOp::Next: {
        auto& a = eval(f->lhs);
        for (int j = 0; j < n; ++j) v[j] = a[w.succ(j)];
        break;
      }
      case LtlOp::Until: {
        auto& g = eval(f->lhs);
        auto& h = eval(f->rhs);
        fix(v, 0, [&](int j, const std::vector<char>& cur) {
          return h[j] || (g[j] && cur[w.succ(j)]);
        });
        break;
      }
      case LtlOp::Eventually: {
        auto& h = eval(f->lhs);
        fix(v, 0, [&](int j, const std::vector<char>& cur) {
          return h[j] || cur[w.succ(j)];
        });
        break;
      }
      case LtlOp::WeakUntil: {
        auto& g = eval(f->lhs);
        auto& h = eval(f->rhs);
        fix(v, 1, [&](int j, const std::vector<char>& cur) {
          return h[j] || (g[j] && cur[w.succ(j)]);
        });
        break;
      }
      case LtlOp::Release: {
        auto& g = eval(f->lhs);
        auto& h = eval(f->rhs);
        fix(v, 1, [&](int j, const std::vector<char>& cur) {
          return h[j] && (g[j] || cur[w.succ(j)]);
        });
        break;
      }
      case LtlOp::Always: {
        auto& h = eval(f->lhs);
        fix(v, 1, [&](int j, const std::vector<char>& cur) {
          return h[j] && cur[w.succ(j)];
        });
        break;
      }
    }
    return memo.emplace(f.get(), std::move(v)).first->second;
  }

  template <class Fn>
  void fix(std::vector<char>& v, char init, Fn step) {
    std::fill(v.begin(), v.end(), init);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int j = n - 1; j >= 0; --j) {
        char nv = step(j, v) ? 1 : 0;
        if (nv != v[j]) {
          v[j] = nv;
          changed = true;
        }
      }
    }
  }
};

}  // namespace

bool evalOnLasso(const LtlPtr& f, const LassoWord& w) {
  Evaluator e(w);
  return e.eval(f)[0] != 0;
}

}  // namespace hush
