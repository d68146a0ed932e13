#include <random>

#include "doctest.h"
#include "hush/ltl.hpp"
#include "testutil.hpp"

using namespace hush;

namespace {

SignalTable twoSignals() {
  SignalTable t;
  t.add("a", SignalKind::Input);
  t.add("b", SignalKind::Output);
  return t;
}

LtlPtr randomFormula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 13);
  switch (pick(rng)) {
    case 0: return ltlAtom(0);
    case 1: return ltlAtom(1);
    case 2: return ltlTrue();
    case 3: return ltlFalse();
    case 4: return ltlNot(randomFormula(rng, depth - 1));
    case 5: return ltlNext(randomFormula(rng, depth - 1));
    case 6: return ltlEventually(randomFormula(rng, depth - 1));
    case 7: return ltlAlways(randomFormula(rng, depth - 1));
    case 8: return ltlAnd(randomFormula(rng, depth - 1), randomFormula(rng, depth - 1));
    case 9: return ltlOr(randomFormula(rng, depth - 1), randomFormula(rng, depth - 1));
    case 10:
      return ltlImplies(randomFormula(rng, depth - 1), randomFormula(rng, depth - 1));
    case 11: return ltlIff(randomFormula(rng, depth - 1), randomFormula(rng, depth - 1));
    case 12:
      return ltlUntil(randomFormula(rng, depth - 1), randomFormula(rng, depth - 1));
    default:
      return ltlWeakUntil(randomFormula(rng, depth - 1), randomFormula(rng, depth - 1));
  }
}

bool nnfClean(const LtlPtr& f) {
  if (!f) return true;
  if (f->op == LtlOp::Implies || f->op == LtlOp::Iff) return false;
  if (f->op == LtlOp::Not && f->lhs->op != LtlOp::Atom) return false;
  return nnfClean(f->lhs) && nnfClean(f->rhs);
}

}  // namespace

TEST_CASE("parse/print round trip") {
  SignalTable t = twoSignals();
  for (const char* s :
       {"a", "!a", "a & b", "a | b & a", "a -> b -> a", "a <-> b <-> a", "X a",
        "F (a U b)", "G (a -> F b)", "a U (b U a)", "a W b", "a R b", "true", "false",
        "(a | b) U !(a & b)", "G F a <-> F G b"}) {
    LtlPtr f = parseLtl(s, t);
    CHECK(ltlEqual(parseLtl(prettyPrint(f, t), t), f));
  }
}

TEST_CASE("precedence and associativity pins") {
  SignalTable t = twoSignals();
  // unary operators bind the whole temporal-binary tail: !a U b == !(a U b)
  CHECK(ltlEqual(parseLtl("!a U b", t), ltlNot(ltlUntil(ltlAtom(0), ltlAtom(1)))));
  // implication is right associative, iff left associative
  CHECK(ltlEqual(parseLtl("a -> b -> a", t),
                 ltlImplies(ltlAtom(0), ltlImplies(ltlAtom(1), ltlAtom(0)))));
  CHECK(ltlEqual(parseLtl("a <-> b <-> a", t),
                 ltlIff(ltlIff(ltlAtom(0), ltlAtom(1)), ltlAtom(0))));
  // & over |, both over ->
  CHECK(ltlEqual(parseLtl("a | b & a", t),
                 ltlOr(ltlAtom(0), ltlAnd(ltlAtom(1), ltlAtom(0)))));
  CHECK(ltlEqual(parseLtl("a & b -> a", t),
                 ltlImplies(ltlAnd(ltlAtom(0), ltlAtom(1)), ltlAtom(0))));
  // temporal binaries right-nest
  CHECK(ltlEqual(parseLtl("a U (b U a)", t),
                 ltlUntil(ltlAtom(0), ltlUntil(ltlAtom(1), ltlAtom(0)))));
}

TEST_CASE("parse errors carry positions") {
  SignalTable t = twoSignals();
  CHECK_THROWS_AS(parseLtl("a &", t), LtlParseError);
  CHECK_THROWS_AS(parseLtl("(a | b", t), LtlParseError);
  CHECK_THROWS_AS(parseLtl("c", t), LtlParseError);
  CHECK_THROWS_AS(parseLtl("a U U b", t), LtlParseError);
  try {
    parseLtl("a &\n& b", t);
    CHECK(false);
  } catch (const LtlParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("nnf pins") {
  SignalTable t = twoSignals();
  CHECK(ltlEqual(toNnf(parseLtl("!(a U b)", t)), parseLtl("(!a) R (!b)", t)));
  CHECK(ltlEqual(toNnf(parseLtl("!(a R b)", t)), parseLtl("(!a) U (!b)", t)));
  CHECK(ltlEqual(toNnf(parseLtl("!F a", t)), parseLtl("G !a", t)));
  CHECK(ltlEqual(toNnf(parseLtl("!X a", t)), parseLtl("X !a", t)));
  CHECK(ltlEqual(toNnf(parseLtl("!!a", t)), parseLtl("a", t)));
}

TEST_CASE("nnf is clean and value preserving") {
  SignalTable t = twoSignals();
  std::mt19937 rng(12345);
  auto lassos = testutil::allLassos(4, 2, 2);
  for (int it = 0; it < 120; ++it) {
    LtlPtr f = randomFormula(rng, 4);
    LtlPtr g = toNnf(f);
    CHECK(nnfClean(g));
    for (const auto& w : lassos) {
      if (evalOnLasso(f, w) != evalOnLasso(g, w)) {
        CAPTURE(prettyPrint(f, t));
        CAPTURE(lassoToString(w, t));
        REQUIRE(false);
      }
    }
  }
}

TEST_CASE("evalOnLasso pins") {
  SignalTable t = twoSignals();
  auto ev = [&](const char* s, LassoWord w) { return evalOnLasso(parseLtl(s, t), w); };
  // letters: bit0 = a, bit1 = b
  CHECK(ev("a", {{}, {1}}));
  CHECK_FALSE(ev("a", {{0}, {1}}));
  CHECK(ev("X a", {{0}, {1}}));
  CHECK(ev("F b", {{0, 0}, {2}}));
  CHECK_FALSE(ev("G b", {{2}, {0}}));
  CHECK(ev("G b", {{}, {2, 3}}));
  CHECK(ev("a U b", {{1, 1}, {2}}));
  CHECK_FALSE(ev("a U b", {{1}, {0}}));
  CHECK(ev("a W b", {{}, {1}}));        // Ga branch
  CHECK_FALSE(ev("a R b", {{2}, {0}})); // b must hold until a&b
  CHECK(ev("a R b", {{}, {2}}));        // Gb branch
  CHECK(ev("G F a", {{}, {0, 1}}));
  CHECK_FALSE(ev("F G a", {{}, {0, 1}}));
}

TEST_CASE("grant pattern pin") {
  SignalTable t;
  t.add("req1", SignalKind::Input);
  t.add("grant1", SignalKind::Output);
  LtlPtr f = parseLtl("G (grant1 -> X ((!grant1) W req1))", t);
  // one grant then silence: no further grant, W holds via its G branch
  CHECK(evalOnLasso(f, {{2}, {0}}));
  // grants recur without fresh requests: violated
  CHECK_FALSE(evalOnLasso(f, {{}, {2, 0}}));
  CHECK_FALSE(evalOnLasso(f, {{}, {2}}));
  // each grant preceded by a fresh request: holds
  CHECK(evalOnLasso(f, {{}, {1, 2}}));
}

TEST_CASE("temporal equivalences on exhaustive lassos") {
  SignalTable t = twoSignals();
  auto lassos = testutil::allLassos(4, 2, 2);
  std::vector<std::pair<const char*, const char*>> pairs = {
      {"a W b", "(a U b) | G a"},
      {"a R b", "(b U (a & b)) | G b"},
      {"F a", "true U a"},
      {"G a", "!F !a"},
      {"a -> b", "!a | b"},
      {"a <-> b", "(a -> b) & (b -> a)"},
      {"a U b", "b | (a & X (a U b))"},
      {"G a", "a & X G a"},
  };
  for (auto [l, r] : pairs) {
    LtlPtr fl = parseLtl(l, t), fr = parseLtl(r, t);
    for (const auto& w : lassos) CHECK(evalOnLasso(fl, w) == evalOnLasso(fr, w));
  }
}

TEST_CASE("ltlSize counts nodes") {
  SignalTable t = twoSignals();
  CHECK(ltlSize(parseLtl("a", t)) == 1);
  CHECK(ltlSize(parseLtl("a U b", t)) == 3);
  CHECK(ltlSize(parseLtl("G (a -> F b)", t)) == 5);
}
