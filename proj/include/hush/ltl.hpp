#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hush/lasso.hpp"
#include "hush/signals.hpp"

namespace hush {

enum class LtlOp {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Next,
  Eventually,
  Always,
  Until,
  WeakUntil,
  Release,
};

struct LtlFormula;
using LtlPtr = std::shared_ptr<const LtlFormula>;

struct LtlFormula {
  LtlOp op;
  int signal = -1;  // for Atom
  LtlPtr lhs, rhs;  // unary ops use lhs only
};

LtlPtr ltlTrue();
LtlPtr ltlFalse();
LtlPtr ltlAtom(int signal);
LtlPtr ltlNot(LtlPtr a);
LtlPtr ltlAnd(LtlPtr a, LtlPtr b);
LtlPtr ltlOr(LtlPtr a, LtlPtr b);
LtlPtr ltlImplies(LtlPtr a, LtlPtr b);
LtlPtr ltlIff(LtlPtr a, LtlPtr b);
LtlPtr ltlNext(LtlPtr a);
LtlPtr ltlEventually(LtlPtr a);
LtlPtr ltlAlways(LtlPtr a);
LtlPtr ltlUntil(LtlPtr a, LtlPtr b);
LtlPtr ltlWeakUntil(LtlPtr a, LtlPtr b);
LtlPtr ltlRelease(LtlPtr a, LtlPtr b);

struct LtlParseError : std::runtime_error {
  int line, column;
  LtlParseError(int l, int c, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(l) + ":" +
                           std::to_string(c) + ": " + msg),
        line(l),
        column(c) {}
};

LtlPtr parseLtl(const std::string& text, const SignalTable& table);
std::string prettyPrint(const LtlPtr& f, const SignalTable& table);

int ltlSize(const LtlPtr& f);
bool ltlEqual(const LtlPtr& a, const LtlPtr& b);

// Negation normal form: negations on atoms only, no implies/iff.
// W and R stay primitive.
LtlPtr toNnf(const LtlPtr& f);

// Direct fixpoint evaluation of f on the lasso word (position 0).
bool evalOnLasso(const LtlPtr& f, const LassoWord& w);

}  // namespace hush
