#include "hush/lasso.hpp"

#include <stdexcept>

namespace hush {

Letter LassoWord::at(long long j) const {
  if (loop.empty()) throw std::runtime_error("lasso with empty loop");
  if (j < (long long)prefix.size()) return prefix[size_t(j)];
  return loop[size_t((j - (long long)prefix.size()) % loop.size())];
}

int LassoWord::succ(int pos) const {
  if (pos + 1 < length()) return pos + 1;
  return int(prefix.size());
}

LassoWord canonicalizeLasso(const LassoWord& w) {
  if (w.loop.empty()) throw std::runtime_error("lasso with empty loop");
  LassoWord r = w;
  // Primitive period of the loop.
  for (size_t p = 1; p <= r.loop.size() / 2; ++p) {
    if (r.loop.size() % p != 0) continue;
    bool periodic = true;
    for (size_t i = p; i < r.loop.size() && periodic; ++i)
      if (r.loop[i] != r.loop[i % p]) periodic = false;
    if (periodic) {
      r.loop.resize(p);
      break;
    }
  }
  // Fold the prefix into the loop while its tail matches the loop tail.
  while (!r.prefix.empty() && r.prefix.back() == r.loop.back()) {
    r.prefix.pop_back();
    // rotate loop right by one
    Letter last = r.loop.back();
    r.loop.pop_back();
    r.loop.insert(r.loop.begin(), last);
  }
  return r;
}

LassoWord mapLasso(const LassoWord& w, Letter keepMask) {
  LassoWord r = w;
  for (auto& l : r.prefix) l &= keepMask;
  for (auto& l : r.loop) l &= keepMask;
  return r;
}

std::string lassoToString(const LassoWord& w, const SignalTable& t) {
  std::string s;
  for (Letter l : w.prefix) s += t.letterToString(l) + " ";
  s += "( ";
  for (Letter l : w.loop) s += t.letterToString(l) + " ";
  s += ")^w";
  return s;
}

}  // namespace hush
