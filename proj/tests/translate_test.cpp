#include "doctest.h"
#include "hush/translate.hpp"
#include "testutil.hpp"

using namespace hush;

namespace {

SignalTable twoSignals() {
  SignalTable t;
  t.add("a", SignalKind::Input);
  t.add("b", SignalKind::Output);
  return t;
}

}  // namespace

TEST_CASE("structural pins") {
  SignalTable t = twoSignals();
  OmegaAutomaton tru = ltlToNbw(ltlTrue(), t);
  tru.validate();
  for (const auto& w : testutil::allLassos(4, 1, 2)) CHECK(memberLasso(tru, w));
  OmegaAutomaton fls = ltlToNbw(ltlFalse(), t);
  CHECK(isEmpty(fls));
  OmegaAutomaton g = ltlToNgbw(toNnf(parseLtl("G a", t)), t);
  g.validate();
  CHECK(g.kind == AccKind::GenBuchi);
  CHECK(g.inSet.size() >= 1);
}

TEST_CASE("translation matches direct evaluation on the template set") {
  SignalTable t = twoSignals();
  auto lassos = testutil::allLassos(4, 2, 2);
  // trimmed-down version of the full acceptance sweep
  auto formulas = testutil::formulaTemplates(t);
  int step = int(formulas.size()) / 60 + 1;
  for (size_t i = 0; i < formulas.size(); i += step) {
    OmegaAutomaton a = ltlToNbw(formulas[i], t);
    a.validate();
    for (const auto& w : lassos) {
      if (memberLasso(a, w) != evalOnLasso(formulas[i], w)) {
        CAPTURE(prettyPrint(formulas[i], t));
        CAPTURE(lassoToString(w, t));
        REQUIRE(false);
      }
    }
  }
}

TEST_CASE("negation translation complements on lassos") {
  SignalTable t = twoSignals();
  auto lassos = testutil::allLassos(4, 2, 2);
  for (const char* s : {"a U b", "G (a -> F b)", "F G a", "a W b", "a <-> X b",
                        "G (b <-> X a)", "(a R b) U a"}) {
    LtlPtr f = parseLtl(s, t);
    OmegaAutomaton neg = ltlNegToNbw(f, t);
    for (const auto& w : lassos) CHECK(memberLasso(neg, w) == !evalOnLasso(f, w));
  }
}

TEST_CASE("template set has the advertised size and node bound") {
  SignalTable t = twoSignals();
  auto formulas = testutil::formulaTemplates(t);
  CHECK(formulas.size() >= 380);
  CHECK(formulas.size() <= 450);
  for (const auto& f : formulas) CHECK(ltlSize(f) <= 8);
}
