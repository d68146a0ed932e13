#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hush/bounded.hpp"
#include "hush/certified.hpp"
#include "hush/closed.hpp"
#include "hush/determinize.hpp"
#include "hush/hoa.hpp"
#include "hush/observer.hpp"
#include "hush/ops.hpp"
#include "hush/problem.hpp"
#include "hush/translate.hpp"

using namespace hush;

namespace {

std::string readFileOrDie(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

Letter maskFromNames(const std::string& list, const SignalTable& table) {
  Letter h = 0;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    auto idx = table.find(cur);
    if (!idx) throw std::runtime_error("unknown signal: " + cur);
    h |= Letter(1) << *idx;
    cur.clear();
  };
  for (char c : list) {
    if (c == ',' || isspace((unsigned char)c))
      flush();
    else
      cur += c;
  }
  flush();
  return h;
}

bool sameShape(const SignalTable& a, const SignalTable& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a.signal(i).name != b.signal(i).name || a.signal(i).kind != b.signal(i).kind)
      return false;
  return true;
}

double seconds(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - from).count();
}

struct Flags {
  int bound = 0;
  bool certified = false;
  std::string observer;  // empty = problem file / default
  std::string engine = "safraless";
  int parallel = 1;
  std::string emit;
  std::string hide;
  std::string out = "strategy.txt";
  std::string transducerPath;
  int seed = 0;  // accepted for test tooling symmetry; engines are deterministic
};

ObserverMode observerMode(const Flags& f, const PrivacyProblem& p) {
  if (f.observer.empty()) return p.observer;
  if (f.observer == "plain") return ObserverMode::Plain;
  if (f.observer == "knows-spec") return ObserverMode::KnowsSpec;
  if (f.observer == "knows-transducer") return ObserverMode::KnowsTransducer;
  throw std::runtime_error("unknown observer mode: " + f.observer);
}

int cmdSynth(const std::string& problemPath, const Flags& f) {
  auto t0 = std::chrono::steady_clock::now();
  PrivacyProblem p = parseProblemFile(problemPath);
  RunReport rep;
  rep.parseSec = seconds(t0);
  ObserverMode mode = observerMode(f, p);
  auto t1 = std::chrono::steady_clock::now();

  std::optional<Transducer> result;
  std::optional<CertifyingTransducer> cert;
  Letter hide = 0;
  if (f.certified) {
    if (f.hide.empty())
      throw std::runtime_error("certified synthesis needs an explicit --hide set");
    if (p.secrets.size() != 1 || p.secrets[0].trigger)
      throw std::runtime_error("certified synthesis takes one unconditional secret");
    hide = maskFromNames(f.hide, p.table);
    CertEngine eng = f.engine == "complete" ? CertEngine::Complete : CertEngine::Safraless;
    cert = synthesizeCertified(p.spec, p.secrets[0].secret, p.table, hide, eng);
    if (cert) result = cert->transducer;
  } else if (f.bound > 0) {
    for (Letter h : enumerateHideSets(p.table, p.budget)) {
      auto t = boundedSynthesis(p.spec, p.secrets, p.table, h, f.bound);
      rep.candidateLog.emplace_back(h, t.has_value());
      if (t) {
        result = std::move(t);
        hide = h;
        break;
      }
    }
  } else {
    SynthOptions so;
    so.parallel = f.parallel;
    so.candidateLog = &rep.candidateLog;
    auto sol = mode == ObserverMode::KnowsSpec ? synthesizeKnowSpec(p, so)
                                               : synthesizeWithPrivacy(p, so);
    if (sol) {
      result = std::move(sol->transducer);
      hide = sol->hideMask;
    }
  }
  rep.solveSec = seconds(t1);
  rep.hideMask = hide;
  rep.verdict = result ? Verdict::Realizable : Verdict::Unrealizable;
  if (result) {
    writeFile(f.out, cert ? printCertifyingTransducer(*cert) : printTransducer(*result));
    rep.artifacts.push_back(f.out);
    if (f.emit.find("dot") != std::string::npos) {
      writeFile(f.out + ".dot", writeDotTransducer(*result));
      rep.artifacts.push_back(f.out + ".dot");
    }
    if (f.emit.find("hoa") != std::string::npos) {
      writeFile(f.out + ".hoa", writeHoa(transducerAutomaton(*result), "strategy"));
      rep.artifacts.push_back(f.out + ".hoa");
    }
  }
  std::cout << rep.toString(p.table);
  return result ? 0 : 1;
}

int cmdCheck(const std::string& problemPath, const Flags& f) {
  auto t0 = std::chrono::steady_clock::now();
  PrivacyProblem p = parseProblemFile(problemPath);
  if (f.transducerPath.empty()) throw std::runtime_error("check needs --transducer");
  Transducer t = parseTransducer(readFileOrDie(f.transducerPath));
  if (!sameShape(t.table, p.table))
    throw std::runtime_error("transducer signals do not match the problem file");
  t.table = p.table;  // adopt the problem's costs
  if (f.hide.empty()) throw std::runtime_error("check needs --hide");
  Letter h = maskFromNames(f.hide, p.table);
  ObserverMode mode = observerMode(f, p);
  RunReport rep;
  rep.parseSec = seconds(t0);
  rep.hideMask = h;
  auto t1 = std::chrono::steady_clock::now();

  std::optional<LassoWord> revealing;
  for (const auto& s : p.secrets) {
    HideVerdict v;
    switch (mode) {
      case ObserverMode::Plain: v = checkHides(t, s, h); break;
      case ObserverMode::KnowsSpec: v = checkHidesKnowSpec(t, p.spec, s, h); break;
      case ObserverMode::KnowsTransducer: v = checkHidesKnowingTransducer(t, s, h); break;
    }
    if (!v.hidden) {
      revealing = v.revealingInput;
      break;
    }
  }
  rep.solveSec = seconds(t1);
  rep.verdict = revealing ? Verdict::Revealed : Verdict::Hidden;
  std::cout << rep.toString(p.table);
  if (revealing)
    std::cout << "revealing input: " << lassoToString(*revealing, p.table) << "\n";
  return revealing ? 1 : 0;
}

int cmdTranslate(const std::string& formula, const std::string& inputs,
                 const std::string& outputs, const std::string& kind,
                 const std::string& noise, const std::vector<std::string>& secrets,
                 const Flags& f) {
  SignalTable table;
  auto addAll = [&](const std::string& list, SignalKind k) {
    std::string cur;
    for (char c : list + ",") {
      if (c == ',' || isspace((unsigned char)c)) {
        if (!cur.empty() && cur != "-") table.add(cur, k);
        cur.clear();
      } else {
        cur += c;
      }
    }
  };
  addAll(inputs, SignalKind::Input);
  addAll(outputs, SignalKind::Output);
  LtlPtr spec = parseLtl(formula, table);
  Letter noiseMask = noise.empty() ? 0 : maskFromNames(noise, table);

  OmegaAutomaton a;
  if (!secrets.empty()) {
    std::vector<SecretSpec> ss;
    for (const auto& s : secrets) ss.push_back({sideOf(parseLtl(s, table)), std::nullopt});
    Letter h = f.hide.empty() ? noiseMask : maskFromNames(f.hide, table);
    a = kind == "dpw" ? buildPrivacyDpw(sideOf(spec), ss, table, h)
                      : buildPrivacyMonitor(sideOf(spec), ss, table, h);
  } else if (kind == "ngbw") {
    a = ltlToNgbw(toNnf(spec), table);
    if (noiseMask) a = applyNoise(a, noiseMask);
  } else if (kind == "dpw") {
    OmegaAutomaton nbw = ltlToNbw(spec, table);
    if (noiseMask) nbw = applyNoise(nbw, noiseMask);
    a = determinize(nbw);
  } else {
    a = ltlToNbw(spec, table);
    if (noiseMask) a = applyNoise(a, noiseMask);
  }
  std::string hoa = writeHoa(a, formula);
  if (f.out == "-" || f.out == "strategy.txt")
    std::cout << hoa;
  else
    writeFile(f.out, hoa);
  if (f.emit.find("dot") != std::string::npos) {
    writeFile((f.out == "-" || f.out == "strategy.txt" ? std::string("automaton") : f.out) +
                  ".dot",
              writeDot(a));
  }
  return 0;
}

int cmdFixture(const std::string& kind, const std::string& graphPath,
               const std::string& hoaPath, int budget, const std::string& outDir) {
  std::filesystem::create_directories(outDir);
  auto path = [&](const std::string& n) {
    return (std::filesystem::path(outDir) / n).string();
  };
  std::ostringstream prob;
  if (kind == "vertex-cover" || kind == "vertex-cover-knowledge") {
    if (graphPath.empty()) throw std::runtime_error("fixture needs --graph");
    Graph g = parseGraph(readFileOrDie(graphPath));
    ClosedFixture fx =
        kind == "vertex-cover" ? vertexCoverFixture(g) : vertexCoverKnowledgeFixture(g);
    writeFile(path("spec.hoa"), writeHoa(fx.spec, "spec"));
    writeFile(path("secret.hoa"), writeHoa(fx.secret, "secret"));
    prob << "inputs: -\n";
    prob << "outputs: " << fx.table.maskToNames(fx.table.outputMask()) << "\n";
    prob << "budget: " << (budget >= 0 ? budget : g.vertexCount) << "\n";
    prob << "spec hoa: spec.hoa\n";
    prob << "secret hoa: secret.hoa\n";
    prob << "observer: " << (kind == "vertex-cover" ? "plain" : "knows-spec") << "\n";
  } else if (kind == "hiding-hardness") {
    if (hoaPath.empty()) throw std::runtime_error("fixture needs --hoa");
    OmegaAutomaton a = readHoa(readFileOrDie(hoaPath));
    HardnessFixture fx = hidingHardnessFixture(a);
    writeFile(path("secret.hoa"), writeHoa(fx.secret, "secret"));
    std::string ins = fx.table.maskToNames(fx.table.inputMask());
    std::string outs = fx.table.maskToNames(fx.table.outputMask());
    prob << "inputs: " << (ins.empty() ? "-" : ins) << "\n";
    prob << "outputs: " << (outs.empty() ? "-" : outs) << "\n";
    prob << "cost: ";
    for (int i = 0; i < fx.table.size(); ++i)
      prob << (i ? ", " : "") << fx.table.signal(i).name << "=" << fx.table.cost(i);
    prob << "\n";
    prob << "budget: 0\n";
    prob << "spec: true\n";
    prob << "secret hoa: secret.hoa\n";
  } else {
    throw std::runtime_error("unknown fixture kind: " + kind);
  }
  writeFile(path("problem.txt"), prob.str());
  std::cout << "wrote " << path("problem.txt") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synthesis and verification of reactive systems that keep secrets "
               "ambiguous to an outside observer"};
  app.require_subcommand(1);
  Flags f;
  std::string problemPath, formula, inputs, outputs, kind = "nbw", noise;
  std::vector<std::string> secrets;
  std::string fixtureKind, graphPath, hoaPath, outDir = ".";
  int fixtureBudget = -1;

  auto addCommon = [&](CLI::App* c) {
    c->add_option("--observer", f.observer, "plain|knows-spec|knows-transducer");
    c->add_option("--parallel", f.parallel, "concurrent hide-set candidates");
    c->add_option("--emit", f.emit, "extra artifacts: dot,hoa");
    c->add_option("--seed", f.seed, "seed for randomized tooling (engines are deterministic)");
    c->add_option("-o,--out", f.out, "output path");
  };

  CLI::App* synth = app.add_subcommand("synth", "synthesize from a problem file");
  synth->add_option("problem", problemPath)->required();
  synth->add_option("--bound", f.bound, "bounded search up to n states");
  synth->add_flag("--certified", f.certified, "synthesize a certificate-carrying machine");
  synth->add_option("--engine", f.engine, "safraless|complete");
  synth->add_option("--hide", f.hide, "explicit hide-set (certified mode)");
  addCommon(synth);

  CLI::App* check = app.add_subcommand("check", "check a transducer against a problem");
  check->add_option("problem", problemPath)->required();
  check->add_option("--transducer", f.transducerPath)->required();
  check->add_option("--hide", f.hide, "hide-set to check under")->required();
  addCommon(check);

  CLI::App* translate = app.add_subcommand("translate", "formula to automaton");
  translate->add_option("formula", formula)->required();
  translate->add_option("--inputs", inputs);
  translate->add_option("--outputs", outputs);
  translate->add_option("--kind", kind, "ngbw|nbw|dpw");
  translate->add_option("--noise", noise, "hide these signals via the noise operator");
  translate->add_option("--secret", secrets, "build the hiding monitor for these secrets");
  translate->add_option("--hide", f.hide, "hide-set for --secret (defaults to --noise)");
  addCommon(translate);

  CLI::App* fixture = app.add_subcommand("fixture", "emit a reduction fixture");
  fixture->add_option("kind", fixtureKind, "vertex-cover|vertex-cover-knowledge|hiding-hardness")
      ->required();
  fixture->add_option("--graph", graphPath, "graph file: 'n m' then edge lines");
  fixture->add_option("--hoa", hoaPath, "source automaton for hiding-hardness");
  fixture->add_option("--budget", fixtureBudget, "budget for the emitted problem");
  fixture->add_option("--out-dir", outDir, "output directory");

  try {
    app.parse(argc, argv);
    if (synth->parsed()) return cmdSynth(problemPath, f);
    if (check->parsed()) return cmdCheck(problemPath, f);
    if (translate->parsed())
      return cmdTranslate(formula, inputs, outputs, kind, noise, secrets, f);
    if (fixture->parsed())
      return cmdFixture(fixtureKind, graphPath, hoaPath, fixtureBudget, outDir);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
