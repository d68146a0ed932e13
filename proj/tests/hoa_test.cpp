#include <random>

#include "doctest.h"
#include "hush/determinize.hpp"
#include "hush/hoa.hpp"
#include "hush/ops.hpp"
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

void checkSameLanguage(const OmegaAutomaton& x, const OmegaAutomaton& y) {
  for (const auto& w : testutil::allLassos(x.numLetters(), 2, 2))
    CHECK(memberLasso(x, w) == memberLasso(y, w));
}

}  // namespace

TEST_CASE("round trip for every acceptance kind") {
  SignalTable t = twoSignals();
  std::mt19937 rng(808);
  // Buchi
  for (int it = 0; it < 20; ++it) {
    OmegaAutomaton a = testutil::randomNbw(rng, t, 3);
    OmegaAutomaton b = readHoa(writeHoa(a), t);
    b.validate();
    CHECK(b.kind == AccKind::Buchi);
    checkSameLanguage(a, b);
  }
  // generalized Buchi straight from the tableau
  {
    OmegaAutomaton g = ltlToNgbw(toNnf(parseLtl("G F a & G F b", t)), t);
    OmegaAutomaton b = readHoa(writeHoa(g), t);
    b.validate();
    checkSameLanguage(g, b);
  }
  // co-Buchi: flip the flag on a random Buchi automaton (structure round trip)
  for (int it = 0; it < 10; ++it) {
    OmegaAutomaton a = dualize(testutil::randomNbw(rng, t, 3));
    REQUIRE(a.kind == AccKind::CoBuchi);
    OmegaAutomaton b = readHoa(writeHoa(a), t);
    b.validate();
    CHECK(b.kind == AccKind::CoBuchi);
    checkSameLanguage(a, b);  // nondeterministic co-Buchi reading
  }
  // parity via determinize
  for (int it = 0; it < 10; ++it) {
    OmegaAutomaton a = determinize(testutil::randomNbw(rng, t, 3));
    OmegaAutomaton b = readHoa(writeHoa(a), t);
    CHECK(b.kind == AccKind::Parity);
    checkSameLanguage(a, b);
  }
}

TEST_CASE("parity conventions are normalized on import") {
  SignalTable t;
  t.add("p", SignalKind::Input);
  auto lang = [&](const OmegaAutomaton& a) {
    std::vector<bool> out;
    for (const auto& w : testutil::allLassos(2, 2, 2))
      out.push_back(memberLasso(a, w));
    return out;
  };
  auto full = [&](const std::string& accName, const std::string& acc,
                  const std::string& s0, const std::string& s1) {
    return "HOA: v1\nStates: 2\nStart: 0\nAP: 1 \"p\"\nacc-name: parity " +
           accName + "\nAcceptance: " + acc + "\n--BODY--\nState: 0 " + s0 +
           "\n[0] 1\n[!0] 0\nState: 1 " + s1 + "\n[t] 1\n--END--\n";
  };
  // F p in four conventions: state 1 is the good sink, state 0 the bad loop
  LtlPtr f = parseLtl("F p", t);
  auto lassos = testutil::allLassos(2, 2, 2);
  std::vector<bool> expected;
  for (const auto& w : lassos) expected.push_back(evalOnLasso(f, w));
  CHECK(lang(readHoa(full("max even 2", "2 Fin(1) & Inf(0)", "{1}", "{0}"), t)) ==
        expected);
  CHECK(lang(readHoa(full("max odd 2", "2 Inf(1)", "{0}", "{1}"), t)) == expected);
  CHECK(lang(readHoa(full("min even 2", "2 Inf(0)", "{1}", "{0}"), t)) == expected);
  CHECK(lang(readHoa(full("min odd 2", "2 Fin(0) & Inf(1)", "{0}", "{1}"), t)) ==
        expected);
}

TEST_CASE("controllable APs mark outputs") {
  SignalTable t = twoSignals();
  std::mt19937 rng(11);
  OmegaAutomaton a = testutil::randomNbw(rng, t, 3);
  std::string hoa = writeHoa(a, "sample");
  CHECK(hoa.find("controllable-AP:") != std::string::npos);
  OmegaAutomaton b = readHoa(hoa);  // fresh table
  CHECK(b.table.signal(0).kind == SignalKind::Input);
  CHECK(b.table.signal(1).kind == SignalKind::Output);
  checkSameLanguage(a, b);
}

TEST_CASE("import against a larger expected table") {
  SignalTable small;
  small.add("p", SignalKind::Input);
  SignalTable big;
  big.add("p", SignalKind::Input);
  big.add("q", SignalKind::Output);
  OmegaAutomaton a = ltlToNbw(parseLtl("G F p", small), small);
  OmegaAutomaton b = readHoa(writeHoa(a), big);
  CHECK(b.table.size() == 2);
  LtlPtr f = parseLtl("G F p", big);
  for (const auto& w : testutil::allLassos(4, 2, 2))
    CHECK(memberLasso(b, w) == evalOnLasso(f, w));
}

TEST_CASE("malformed inputs are rejected") {
  SignalTable t = twoSignals();
  CHECK_THROWS(readHoa("HOA: v1\n--BODY--\n--END--\n"));
  CHECK_THROWS(readHoa("not hoa at all"));
  OmegaAutomaton a = ltlToNbw(parseLtl("a U b", t), t);
  std::string good = writeHoa(a);
  std::string bad = good;
  bad.replace(bad.find("--END--"), 7, "");
  CHECK_THROWS(readHoa(bad));
}

TEST_CASE("dot export mentions every state") {
  SignalTable t = twoSignals();
  OmegaAutomaton a = ltlToNbw(parseLtl("a U b", t), t);
  std::string dot = writeDot(a);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
