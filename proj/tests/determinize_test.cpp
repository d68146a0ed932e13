#include <random>

#include "doctest.h"
#include "hush/determinize.hpp"
#include "hush/ops.hpp"
#include "hush/translate.hpp"
#include "testutil.hpp"

using namespace hush;

namespace {

SignalTable oneSignal() {
  SignalTable t;
  t.add("p", SignalKind::Output);
  return t;
}

}  // namespace

TEST_CASE("output is a total deterministic parity automaton") {
  SignalTable t = oneSignal();
  std::mt19937 rng(99);
  for (int it = 0; it < 50; ++it) {
    OmegaAutomaton a = testutil::randomNbw(rng, t, 4);
    OmegaAutomaton d = determinize(a);
    d.validate();
    CHECK(d.kind == AccKind::Parity);
    CHECK(d.isDeterministic());
    CHECK(d.isTotal());
  }
}

TEST_CASE("language agreement on exhaustive and random lassos") {
  SignalTable t = oneSignal();
  std::mt19937 rng(2024);
  auto exhaustive = testutil::allLassos(2, 3, 3);
  for (int it = 0; it < 120; ++it) {
    OmegaAutomaton a = testutil::randomNbw(rng, t, 4);
    OmegaAutomaton d = determinize(a);
    for (const auto& w : exhaustive) CHECK(memberLasso(d, w) == memberLasso(a, w));
    for (int r = 0; r < 20; ++r) {
      LassoWord w = testutil::randomLasso(rng, 2, 6, 6);
      CHECK(memberLasso(d, w) == memberLasso(a, w));
    }
  }
}

TEST_CASE("complement flips membership") {
  SignalTable t = oneSignal();
  std::mt19937 rng(31337);
  auto lassos = testutil::allLassos(2, 2, 3);
  for (int it = 0; it < 60; ++it) {
    OmegaAutomaton a = testutil::randomNbw(rng, t, 4);
    OmegaAutomaton d = determinize(a);
    OmegaAutomaton c = complementDpw(d);
    c.validate();
    for (const auto& w : lassos) CHECK(memberLasso(c, w) == !memberLasso(a, w));
    // and back through the nondeterministic view
    OmegaAutomaton n = dpwToNbw(c);
    for (const auto& w : lassos) CHECK(memberLasso(n, w) == !memberLasso(a, w));
  }
}

TEST_CASE("determinizing formula automata") {
  SignalTable t;
  t.add("a", SignalKind::Input);
  t.add("b", SignalKind::Output);
  auto lassos = testutil::allLassos(4, 2, 2);
  for (const char* s : {"G (a -> F b)", "F G a", "a U b", "G F a <-> G F b"}) {
    LtlPtr f = parseLtl(s, t);
    OmegaAutomaton d = determinize(ltlToNbw(f, t));
    CHECK(d.isDeterministic());
    for (const auto& w : lassos) CHECK(memberLasso(d, w) == evalOnLasso(f, w));
  }
}

TEST_CASE("containment with counterexamples") {
  SignalTable t = oneSignal();
  std::mt19937 rng(555);
  for (int it = 0; it < 60; ++it) {
    OmegaAutomaton a = testutil::randomNbw(rng, t, 3);
    OmegaAutomaton b = testutil::randomNbw(rng, t, 3);
    OmegaAutomaton db = determinize(b);
    auto cex = containedInDpw(a, db);
    if (cex) {
      CHECK(memberLasso(a, *cex));
      CHECK_FALSE(memberLasso(db, *cex));
    } else {
      for (const auto& w : testutil::allLassos(2, 3, 3))
        CHECK((!memberLasso(a, w) || memberLasso(db, w)));
    }
  }
}
