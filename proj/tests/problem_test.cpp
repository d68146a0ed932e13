#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hush/hoa.hpp"
#include "hush/problem.hpp"
#include "hush/translate.hpp"

using namespace hush;

TEST_CASE("full problem file") {
  std::string text =
      "# scheduler with one user\n"
      "inputs: req1, req2\n"
      "outputs: grant1   # trailing comment\n"
      "cost: req1=2, grant1=0\n"
      "budget: 3\n"
      "observer: knows-spec\n"
      "spec: G (req1 -> F grant1)\n"
      "secret: G (grant1 -> X ((!grant1) W req1))\n"
      "secret if G req2 : F grant1\n";
  PrivacyProblem p = parseProblem(text);
  REQUIRE(p.table.size() == 3);
  CHECK(p.table.signal(0).name == "req1");
  CHECK(p.table.signal(0).kind == SignalKind::Input);
  CHECK(p.table.signal(2).kind == SignalKind::Output);
  CHECK(p.table.cost(0) == 2);
  CHECK(p.table.cost(1) == 1);  // unlisted signals default to cost 1
  CHECK(p.table.cost(2) == 0);
  CHECK(p.budget == 3);
  CHECK(p.observer == ObserverMode::KnowsSpec);
  REQUIRE(p.spec.isFormula());
  REQUIRE(p.secrets.size() == 2);
  CHECK_FALSE(p.secrets[0].trigger.has_value());
  REQUIRE(p.secrets[1].trigger.has_value());
  CHECK(p.secrets[1].trigger->isFormula());
  CHECK(evalOnLasso(p.secrets[1].secret.formula, {{}, {4}}));
}

TEST_CASE("defaults and no-signal placeholders") {
  PrivacyProblem p = parseProblem("inputs: -\noutputs: p\nsecret: p\n");
  CHECK(p.table.size() == 1);
  CHECK(p.budget == 0);
  CHECK(p.observer == ObserverMode::Plain);
  // spec defaults to true
  CHECK(p.spec.isFormula());
  CHECK(p.spec.formula->op == LtlOp::True);
}

TEST_CASE("errors") {
  CHECK_THROWS(parseProblem("budget: 1\n"));                       // no signals
  CHECK_THROWS(parseProblem("inputs: a\noutputs: b\nbudget: -1\n"));
  CHECK_THROWS(parseProblem("inputs: a\noutputs: b\ncost: c=1\n"));
  CHECK_THROWS(parseProblem("inputs: a\noutputs: b\ncost: a=-2\n"));
  CHECK_THROWS(parseProblem("inputs: a\noutputs: b\ncost: a\n"));
  CHECK_THROWS(parseProblem("inputs: a\noutputs: b\nobserver: psychic\n"));
  CHECK_THROWS(parseProblem("inputs: a\noutputs: b\nsecret if G a F b\n"));
  CHECK_THROWS(parseProblem("inputs: a\noutputs: b\nspec: G (\n"));
  CHECK_THROWS(parseProblem("inputs: a\noutputs: b\nspec hoa: /nonexistent.hoa\n"));
}

TEST_CASE("hoa sides resolve against the base directory") {
  SignalTable t;
  t.add("i", SignalKind::Input);
  t.add("o", SignalKind::Output);
  OmegaAutomaton a = ltlToNbw(parseLtl("G F o", t), t);
  std::string dir = "problem_test_tmp";
  std::filesystem::create_directory(dir);
  {
    std::ofstream out(dir + "/sec.hoa");
    out << writeHoa(a);
  }
  PrivacyProblem p =
      parseProblem("inputs: i\noutputs: o\nsecret hoa: sec.hoa\n", dir);
  REQUIRE(p.secrets.size() == 1);
  CHECK_FALSE(p.secrets[0].secret.isFormula());
  CHECK(p.secrets[0].secret.automaton->numStates() == a.numStates());
  // parseProblemFile uses the file's own directory
  {
    std::ofstream out(dir + "/prob.txt");
    out << "inputs: i\noutputs: o\nspec hoa: sec.hoa\n";
  }
  PrivacyProblem q = parseProblemFile(dir + "/prob.txt");
  CHECK_FALSE(q.spec.isFormula());
  std::filesystem::remove_all(dir);
}

TEST_CASE("report rendering") {
  SignalTable t;
  t.add("a", SignalKind::Input);
  t.add("b", SignalKind::Output);
  RunReport r;
  r.verdict = Verdict::Realizable;
  r.hideMask = 3;
  r.artifacts = {"strategy.txt"};
  r.parseSec = 0.5;
  r.solveSec = 1.5;
  r.candidateLog = {{3, false}, {1, true}};
  std::string s = r.toString(t);
  CHECK(s.find("verdict: realizable\n") != std::string::npos);
  CHECK(s.find("hide: a,b\n") != std::string::npos);
  CHECK(s.find("artifact: strategy.txt\n") != std::string::npos);
  CHECK(s.find("candidate: {a,b} lost\n") != std::string::npos);
  CHECK(s.find("candidate: {a} won\n") != std::string::npos);
  RunReport u;
  u.verdict = Verdict::Revealed;
  std::string su = u.toString(t);
  CHECK(su.find("verdict: revealed\n") != std::string::npos);
  CHECK(su.find("hide:") == std::string::npos);
}
