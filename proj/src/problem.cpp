#include "hush/problem.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hush/hoa.hpp"

namespace hush {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> commaSplit(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  cur = trim(cur);
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SpecSide loadHoaSide(const std::string& arg, const std::string& baseDir,
                     const SignalTable& table) {
  std::filesystem::path p(trim(arg));
  if (p.is_relative()) p = std::filesystem::path(baseDir) / p;
  return sideOf(readHoa(readFile(p.string()), table));
}

}  // namespace

PrivacyProblem parseProblem(const std::string& text, const std::string& baseDir) {
  PrivacyProblem p;
  p.spec = sideOf(ltlTrue());
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      size_t hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      raw = trim(raw);
      if (!raw.empty()) lines.push_back(raw);
    }
  }
  auto prefixed = [](const std::string& l, const std::string& p, std::string& rest) {
    if (l.rfind(p, 0) != 0) return false;
    rest = trim(l.substr(p.size()));
    return true;
  };

  // pass 1: table, costs, budget, observer
  bool sawSignals = false;
  for (const auto& l : lines) {
    std::string rest;
    if (prefixed(l, "inputs:", rest)) {
      for (const auto& n : commaSplit(rest))
        if (n != "-") p.table.add(n, SignalKind::Input);
      sawSignals = true;
    } else if (prefixed(l, "outputs:", rest)) {
      for (const auto& n : commaSplit(rest))
        if (n != "-") p.table.add(n, SignalKind::Output);
      sawSignals = true;
    } else if (prefixed(l, "budget:", rest)) {
      p.budget = std::stoi(rest);
      if (p.budget < 0) throw std::runtime_error("problem file: negative budget");
    } else if (prefixed(l, "observer:", rest)) {
      if (rest == "plain")
        p.observer = ObserverMode::Plain;
      else if (rest == "knows-spec")
        p.observer = ObserverMode::KnowsSpec;
      else
        throw std::runtime_error("problem file: unknown observer mode: " + rest);
    }
  }
  if (!sawSignals) throw std::runtime_error("problem file: missing inputs:/outputs: lines");
  for (const auto& l : lines) {
    std::string rest;
    if (!prefixed(l, "cost:", rest)) continue;
    for (const auto& item : commaSplit(rest)) {
      size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error("problem file: bad cost entry: " + item);
      std::string name = trim(item.substr(0, eq));
      int c = std::stoi(trim(item.substr(eq + 1)));
      if (c < 0) throw std::runtime_error("problem file: negative cost for " + name);
      auto idx = p.table.find(name);
      if (!idx) throw std::runtime_error("problem file: cost for unknown signal " + name);
      p.table.setCost(*idx, c);
    }
  }

  // pass 2: spec and secrets (need the finished table)
  for (const auto& l : lines) {
    std::string rest;
    if (prefixed(l, "spec hoa:", rest)) {
      p.spec = loadHoaSide(rest, baseDir, p.table);
    } else if (prefixed(l, "spec:", rest)) {
      p.spec = sideOf(parseLtl(rest, p.table));
    } else if (prefixed(l, "secret hoa:", rest)) {
      p.secrets.push_back(SecretSpec{loadHoaSide(rest, baseDir, p.table), std::nullopt});
    } else if (prefixed(l, "secret if", rest)) {
      size_t colon = rest.find(':');
      if (colon == std::string::npos)
        throw std::runtime_error("problem file: conditional secret needs ':'");
      SecretSpec s;
      s.trigger = sideOf(parseLtl(trim(rest.substr(0, colon)), p.table));
      s.secret = sideOf(parseLtl(trim(rest.substr(colon + 1)), p.table));
      p.secrets.push_back(std::move(s));
    } else if (prefixed(l, "secret:", rest)) {
      p.secrets.push_back(SecretSpec{sideOf(parseLtl(rest, p.table)), std::nullopt});
    }
  }
  return p;
}

PrivacyProblem parseProblemFile(const std::string& path) {
  std::filesystem::path fp(path);
  return parseProblem(readFile(path), fp.parent_path().empty()
                                          ? std::string(".")
                                          : fp.parent_path().string());
}

std::string RunReport::toString(const SignalTable& table) const {
  std::ostringstream o;
  const char* v = "unknown";
  switch (verdict) {
    case Verdict::Realizable: v = "realizable"; break;
    case Verdict::Unrealizable: v = "unrealizable"; break;
    case Verdict::Hidden: v = "hidden"; break;
    case Verdict::Revealed: v = "revealed"; break;
    case Verdict::Unknown: break;
  }
  o << "verdict: " << v << "\n";
  if (verdict == Verdict::Realizable) {
    std::string names = table.maskToNames(hideMask);
    o << "hide: " << (names.empty() ? "-" : names) << "\n";
  }
  for (const auto& a : artifacts) o << "artifact: " << a << "\n";
  o << "time: parse=" << parseSec << "s solve=" << solveSec << "s\n";
  for (const auto& [h, won] : candidateLog) {
    std::string names = table.maskToNames(h);
    o << "candidate: {" << names << "} " << (won ? "won" : "lost") << "\n";
  }
  return o.str();
}

}  // namespace hush
