#pragma once

#include <string>
#include <vector>

#include "hush/signals.hpp"

namespace hush {

// Ultimately periodic word: prefix followed by a nonempty loop repeated forever.
struct LassoWord {
  std::vector<Letter> prefix;
  std::vector<Letter> loop;

  int length() const { return int(prefix.size() + loop.size()); }
  // Letter at absolute position j >= 0.
  Letter at(long long j) const;
  // Position-graph successor for positions 0..length()-1 with loopback.
  int succ(int pos) const;
  bool operator==(const LassoWord&) const = default;
};

// Minimal prefix + primitive loop; equal infinite words get equal forms.
LassoWord canonicalizeLasso(const LassoWord& w);

// Apply f letter-wise (e.g. hide bits).
LassoWord mapLasso(const LassoWord& w, Letter keepMask);

std::string lassoToString(const LassoWord& w, const SignalTable& t);

}  // namespace hush
