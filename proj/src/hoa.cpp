#include "hush/hoa.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hush {

namespace {

// max odd convention: accepting iff the maximal set index visited infinitely
// often is odd
std::string parityFormulaRec(int d) {
  bool acc = d % 2 == 1;
  std::string self = std::to_string(d);
  if (d == 0) return acc ? "Inf(0)" : "Fin(0)";
  std::string rest = parityFormulaRec(d - 1);
  if (acc) return "Inf(" + self + ") | (Fin(" + self + ") & (" + rest + "))";
  return "Fin(" + self + ") & (" + rest + ")";
}

}  // namespace

std::string writeHoa(const OmegaAutomaton& a, const std::string& name) {
  a.validate();
  std::ostringstream o;
  o << "HOA: v1\n";
  if (!name.empty()) o << "name: \"" << name << "\"\n";
  o << "States: " << a.numStates() << "\n";
  o << "Start: " << a.initial << "\n";
  o << "AP: " << a.table.size();
  for (int i = 0; i < a.table.size(); ++i) o << " \"" << a.table.signal(i).name << "\"";
  o << "\n";
  {
    std::string cap;
    for (int i : a.table.outputs()) cap += " " + std::to_string(i);
    if (!cap.empty()) o << "controllable-AP:" << cap << "\n";
  }
  switch (a.kind) {
    case AccKind::Buchi:
      o << "acc-name: Buchi\nAcceptance: 1 Inf(0)\n";
      break;
    case AccKind::CoBuchi:
      o << "acc-name: co-Buchi\nAcceptance: 1 Fin(0)\n";
      break;
    case AccKind::GenBuchi: {
      int k = int(a.inSet.size());
      o << "acc-name: generalized-Buchi " << k << "\nAcceptance: " << k << " ";
      for (int i = 0; i < k; ++i) o << (i ? "&" : "") << "Inf(" << i << ")";
      o << "\n";
      break;
    }
    case AccKind::Parity: {
      int k = *std::max_element(a.rank.begin(), a.rank.end());
      o << "acc-name: parity max odd " << k << "\n";
      o << "Acceptance: " << k << " " << parityFormulaRec(k - 1) << "\n";
      break;
    }
  }
  o << "properties: state-acc trans-labels explicit-labels\n";
  o << "--BODY--\n";
  int L = a.numLetters();
  for (int q = 0; q < a.numStates(); ++q) {
    o << "State: " << q;
    if (!a.names.empty() && !a.names[q].empty()) {
      std::string esc;
      for (char c : a.names[q]) {
        if (c == '"' || c == '\\') esc += '\\';
        esc += c;
      }
      o << " \"" << esc << "\"";
    }
    // acceptance sets
    std::string sets;
    if (a.kind == AccKind::Parity) {
      sets = std::to_string(a.rank[q] - 1);
    } else {
      for (size_t s = 0; s < a.inSet.size(); ++s)
        if (a.inSet[s][q]) sets += (sets.empty() ? "" : " ") + std::to_string(s);
    }
    if (!sets.empty() || a.kind == AccKind::Parity) o << " {" << sets << "}";
    o << "\n";
    for (int l = 0; l < L; ++l) {
      if (a.trans[q][l].empty()) continue;
      std::string label;
      if (a.table.size() == 0) {
        label = "t";
      } else {
        for (int i = 0; i < a.table.size(); ++i) {
          if (i) label += "&";
          if (!(Letter(l) & (Letter(1) << i))) label += "!";
          label += std::to_string(i);
        }
      }
      for (int t : a.trans[q][l]) o << "[" << label << "] " << t << "\n";
    }
  }
  o << "--END--\n";
  return o.str();
}

// ---------------------------------------------------------------------------
// Import

namespace {

struct LabelExpr {
  // 0=true,1=false,2=ap,3=not,4=and,5=or
  int kind;
  int ap = -1;
  std::vector<LabelExpr> kids;

  bool eval(const std::vector<char>& ap2val) const {
    switch (kind) {
      case 0: return true;
      case 1: return false;
      case 2: return ap2val[ap];
      case 3: return !kids[0].eval(ap2val);
      case 4:
        for (const auto& k : kids)
          if (!k.eval(ap2val)) return false;
        return true;
      default:
        for (const auto& k : kids)
          if (k.eval(ap2val)) return true;
        return false;
    }
  }
};

struct LabelParser {
  const std::string& s;
  size_t i = 0;
  explicit LabelParser(const std::string& src) : s(src) {}
  void ws() {
    while (i < s.size() && isspace((unsigned char)s[i])) ++i;
  }
  LabelExpr parse() {
    LabelExpr e = disj();
    ws();
    if (i != s.size()) throw std::runtime_error("bad HOA label: " + s);
    return e;
  }
  LabelExpr disj() {
    LabelExpr e = conj();
    ws();
    while (i < s.size() && s[i] == '|') {
      ++i;
      LabelExpr r{5};
      r.kids.push_back(std::move(e));
      r.kids.push_back(conj());
      e = std::move(r);
      ws();
    }
    return e;
  }
  LabelExpr conj() {
    LabelExpr e = atom();
    ws();
    while (i < s.size() && s[i] == '&') {
      ++i;
      LabelExpr r{4};
      r.kids.push_back(std::move(e));
      r.kids.push_back(atom());
      e = std::move(r);
      ws();
    }
    return e;
  }
  LabelExpr atom() {
    ws();
    if (i >= s.size()) throw std::runtime_error("bad HOA label: " + s);
    if (s[i] == '!') {
      ++i;
      LabelExpr r{3};
      r.kids.push_back(atom());
      return r;
    }
    if (s[i] == '(') {
      ++i;
      LabelExpr e = disj();
      ws();
      if (i >= s.size() || s[i] != ')') throw std::runtime_error("bad HOA label: " + s);
      ++i;
      return e;
    }
    if (s[i] == 't') {
      ++i;
      return LabelExpr{0};
    }
    if (s[i] == 'f') {
      ++i;
      return LabelExpr{1};
    }
    if (isdigit((unsigned char)s[i])) {
      int v = 0;
      while (i < s.size() && isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
      LabelExpr r{2};
      r.ap = v;
      return r;
    }
    throw std::runtime_error("bad HOA label: " + s);
  }
};

std::vector<std::string> splitQuoted(const std::string& line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    if (isspace((unsigned char)line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '"') {
      std::string s;
      ++i;
      while (i < line.size() && line[i] != '"') {
        if (line[i] == '\\' && i + 1 < line.size()) ++i;
        s += line[i++];
      }
      if (i >= line.size()) throw std::runtime_error("unterminated string in HOA");
      ++i;
      out.push_back("\"" + s);
    } else {
      std::string s;
      while (i < line.size() && !isspace((unsigned char)line[i])) s += line[i++];
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

OmegaAutomaton readHoa(const std::string& text, const std::optional<SignalTable>& expect) {
  std::istringstream in(text);
  std::string line;
  int numStates = -1, start = -1;
  std::vector<std::string> apNames;
  std::vector<int> controllable;
  std::string accName;
  bool inBody = false;
  bool sawEnd = false;

  struct Edge {
    LabelExpr label;
    int target;
  };
  struct StateInfo {
    std::vector<int> sets;
    std::vector<Edge> edges;
    std::string name;
    bool seen = false;
  };
  std::vector<StateInfo> states;
  int curState = -1;

  auto parseSets = [&](const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s) {
      if (isdigit((unsigned char)c)) {
        cur += c;
      } else if (!cur.empty()) {
        out.push_back(std::stoi(cur));
        cur.clear();
      }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
  };

  while (std::getline(in, line)) {
    // strip comments and whitespace
    auto c = line.find("/*");
    if (c != std::string::npos) line = line.substr(0, c);
    while (!line.empty() && isspace((unsigned char)line.back())) line.pop_back();
    size_t b = 0;
    while (b < line.size() && isspace((unsigned char)line[b])) ++b;
    line = line.substr(b);
    if (line.empty()) continue;
    if (line == "--BODY--") {
      inBody = true;
      if (numStates < 0) throw std::runtime_error("HOA: missing States header");
      states.resize(numStates);
      continue;
    }
    if (line == "--END--") {
      sawEnd = true;
      break;
    }
    if (!inBody) {
      auto colon = line.find(':');
      if (colon == std::string::npos) throw std::runtime_error("HOA: bad header line: " + line);
      std::string key = line.substr(0, colon);
      std::string val = line.substr(colon + 1);
      size_t vb = 0;
      while (vb < val.size() && isspace((unsigned char)val[vb])) ++vb;
      val = val.substr(vb);
      if (key == "HOA") {
        if (val != "v1") throw std::runtime_error("HOA: unsupported version " + val);
      } else if (key == "States") {
        numStates = std::stoi(val);
      } else if (key == "Start") {
        if (start != -1) throw std::runtime_error("HOA: multiple start states unsupported");
        if (val.find_first_of("&|") != std::string::npos)
          throw std::runtime_error("HOA: start conjunctions unsupported");
        start = std::stoi(val);
      } else if (key == "AP") {
        auto toks = splitQuoted(val);
        if (toks.empty()) throw std::runtime_error("HOA: bad AP line");
        int k = std::stoi(toks[0]);
        for (int i = 0; i < k; ++i) {
          if (1 + i >= int(toks.size()) || toks[1 + i][0] != '"')
            throw std::runtime_error("HOA: bad AP line");
          apNames.push_back(toks[1 + i].substr(1));
        }
      } else if (key == "controllable-AP") {
        controllable = parseSets(val);
      } else if (key == "acc-name") {
        accName = val;
      } else if (key == "Acceptance" || key == "name" || key == "tool" ||
                 key == "properties") {
        // acceptance is taken from acc-name; the rest is informational
      } else {
        // ignore unknown headers
      }
      continue;
    }
    // body
    if (line.rfind("State:", 0) == 0) {
      auto toks = splitQuoted(line.substr(6));
      size_t ti = 0;
      if (ti >= toks.size()) throw std::runtime_error("HOA: bad State line");
      if (toks[ti][0] == '[') throw std::runtime_error("HOA: state labels unsupported");
      curState = std::stoi(toks[ti++]);
      if (curState < 0 || curState >= numStates)
        throw std::runtime_error("HOA: state id out of range");
      states[curState].seen = true;
      std::string rest;
      for (; ti < toks.size(); ++ti) {
        if (toks[ti][0] == '"') {
          states[curState].name = toks[ti].substr(1);
        } else {
          rest += toks[ti];
        }
      }
      auto lb = rest.find('{');
      if (lb != std::string::npos) states[curState].sets = parseSets(rest.substr(lb));
      continue;
    }
    if (line[0] == '[') {
      if (curState < 0) throw std::runtime_error("HOA: edge before State");
      auto rb = line.find(']');
      if (rb == std::string::npos) throw std::runtime_error("HOA: bad edge line");
      std::string lbl = line.substr(1, rb - 1);
      std::string rest = line.substr(rb + 1);
      if (rest.find('{') != std::string::npos)
        throw std::runtime_error("HOA: transition-based acceptance unsupported");
      LabelParser lp(lbl);
      Edge e{lp.parse(), std::stoi(rest)};
      if (e.target < 0 || e.target >= numStates)
        throw std::runtime_error("HOA: edge target out of range");
      states[curState].edges.push_back(std::move(e));
      continue;
    }
    throw std::runtime_error("HOA: implicit-label bodies unsupported: " + line);
  }
  if (!sawEnd) throw std::runtime_error("HOA: missing --END--");
  if (numStates <= 0) throw std::runtime_error("HOA: no states");
  if (start < 0) throw std::runtime_error("HOA: missing Start");
  if (accName.empty()) throw std::runtime_error("HOA: missing acc-name");
  if (int(states.size()) != numStates) states.resize(numStates);

  // table and AP mapping
  SignalTable table;
  std::vector<int> ap2sig(apNames.size());
  if (expect) {
    table = *expect;
    for (size_t i = 0; i < apNames.size(); ++i) {
      auto idx = table.find(apNames[i]);
      if (!idx) throw std::runtime_error("HOA: AP '" + apNames[i] + "' not in signal table");
      ap2sig[i] = *idx;
    }
  } else {
    std::vector<char> ctl(apNames.size(), 0);
    for (int i : controllable) {
      if (i < 0 || i >= int(apNames.size()))
        throw std::runtime_error("HOA: controllable-AP index out of range");
      ctl[i] = 1;
    }
    for (size_t i = 0; i < apNames.size(); ++i) {
      table.add(apNames[i], ctl[i] ? SignalKind::Output : SignalKind::Input);
      ap2sig[i] = int(i);
    }
  }

  OmegaAutomaton a;
  a.table = table;
  a.initial = start;
  int L = a.numLetters();
  a.trans.assign(numStates, std::vector<std::vector<int>>(L));
  for (int q = 0; q < numStates; ++q) {
    for (int l = 0; l < L; ++l) {
      std::vector<char> ap2val(apNames.size(), 0);
      for (size_t i = 0; i < apNames.size(); ++i)
        ap2val[i] = (Letter(l) & (Letter(1) << ap2sig[i])) ? 1 : 0;
      for (const auto& e : states[q].edges)
        if (e.label.eval(ap2val)) a.trans[q][l].push_back(e.target);
      std::sort(a.trans[q][l].begin(), a.trans[q][l].end());
      a.trans[q][l].erase(std::unique(a.trans[q][l].begin(), a.trans[q][l].end()),
                          a.trans[q][l].end());
    }
  }
  a.names.resize(numStates);
  for (int q = 0; q < numStates; ++q) a.names[q] = states[q].name;
  bool anyName = false;
  for (const auto& nm : a.names)
    if (!nm.empty()) anyName = true;
  if (!anyName) a.names.clear();

  // acceptance
  std::istringstream an(accName);
  std::string word;
  an >> word;
  if (word == "Buchi") {
    a.kind = AccKind::Buchi;
    a.inSet.assign(1, std::vector<char>(numStates, 0));
    for (int q = 0; q < numStates; ++q)
      for (int s : states[q].sets)
        if (s == 0) a.inSet[0][q] = 1;
  } else if (word == "co-Buchi") {
    a.kind = AccKind::CoBuchi;
    a.inSet.assign(1, std::vector<char>(numStates, 0));
    for (int q = 0; q < numStates; ++q)
      for (int s : states[q].sets)
        if (s == 0) a.inSet[0][q] = 1;
  } else if (word == "generalized-Buchi") {
    int k;
    an >> k;
    if (k < 1) throw std::runtime_error("HOA: bad generalized-Buchi arity");
    a.kind = AccKind::GenBuchi;
    a.inSet.assign(k, std::vector<char>(numStates, 0));
    for (int q = 0; q < numStates; ++q)
      for (int s : states[q].sets) {
        if (s < 0 || s >= k) throw std::runtime_error("HOA: acceptance set out of range");
        a.inSet[s][q] = 1;
      }
  } else if (word == "parity") {
    std::string mm, eo;
    int k;
    an >> mm >> eo >> k;
    if ((mm != "max" && mm != "min") || (eo != "even" && eo != "odd") || k < 1)
      throw std::runtime_error("HOA: bad parity acc-name: " + accName);
    a.kind = AccKind::Parity;
    a.rank.assign(numStates, -1);
    for (int q = 0; q < numStates; ++q) {
      if (states[q].sets.size() != 1)
        throw std::runtime_error("HOA: parity states need exactly one set");
      int s = states[q].sets[0];
      if (s < 0 || s >= k) throw std::runtime_error("HOA: priority out of range");
      int r;
      if (mm == "max") {
        // max odd: accepting sets are the odd ones -> rank = set + 1
        // max even: rank = set + 2
        r = eo == "odd" ? s + 1 : s + 2;
      } else {
        // min: reverse the order; pick the offset so parity is preserved
        int C = k;
        bool wantEvenAccept = (eo == "even");
        // rank = C - s must be even exactly when s is accepting
        // s accepting iff (s even) == wantEvenAccept
        // choose C so that C - s parity matches: C even keeps parity of s,
        // C odd flips it
        if (wantEvenAccept) {
          if (C % 2 != 0) ++C;  // C even: even s -> even rank
        } else {
          if (C % 2 == 0) ++C;  // C odd: odd s -> even rank
        }
        r = C - s;
      }
      a.rank[q] = r;
    }
  } else {
    throw std::runtime_error("HOA: unsupported acc-name: " + accName);
  }
  a.validate();
  return a;
}

std::string writeDot(const OmegaAutomaton& a) {
  std::ostringstream o;
  o << "digraph automaton {\n  rankdir=LR;\n  init [shape=point];\n";
  for (int q = 0; q < a.numStates(); ++q) {
    std::string shape = "circle";
    std::string extra;
    switch (a.kind) {
      case AccKind::Buchi:
      case AccKind::CoBuchi:
        if (a.inSet[0][q]) shape = "doublecircle";
        break;
      case AccKind::GenBuchi: {
        std::string sets;
        for (size_t s = 0; s < a.inSet.size(); ++s)
          if (a.inSet[s][q]) sets += (sets.empty() ? "" : ",") + std::to_string(s);
        if (!sets.empty()) extra = "\\n{" + sets + "}";
        break;
      }
      case AccKind::Parity:
        extra = "\\n" + std::to_string(a.rank[q]);
        break;
    }
    o << "  q" << q << " [shape=" << shape << ", label=\"" << q << extra << "\"];\n";
  }
  o << "  init -> q" << a.initial << ";\n";
  int L = a.numLetters();
  for (int q = 0; q < a.numStates(); ++q)
    for (int l = 0; l < L; ++l)
      for (int t : a.trans[q][l])
        o << "  q" << q << " -> q" << t << " [label=\"" << a.table.letterToString(Letter(l))
          << "\"];\n";
  o << "}\n";
  return o.str();
}

}  // namespace hush
