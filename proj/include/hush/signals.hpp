#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hush {

// A letter is a bit vector over the signal table, bit i = signal i is high.
using Letter = uint32_t;

enum class SignalKind { Input, Output };

struct Signal {
  std::string name;
  SignalKind kind;
  int cost = 1;

  bool operator==(const Signal&) const = default;
};

class SignalTable {
 public:
  int add(std::string name, SignalKind kind, int cost = 1);
  int size() const { return static_cast<int>(signals_.size()); }
  const Signal& signal(int i) const { return signals_[i]; }
  std::optional<int> find(std::string_view name) const;
  int cost(int i) const { return signals_[i].cost; }
  void setCost(int i, int c) { signals_[i].cost = c; }

  int numLetters() const { return 1 << signals_.size(); }
  Letter inputMask() const;
  Letter outputMask() const;
  std::vector<int> inputs() const;
  std::vector<int> outputs() const;
  // All sub-letters over a mask, ascending numeric order (2^popcount entries).
  static std::vector<Letter> subLetters(Letter mask);
  std::vector<Letter> inputLetters() const { return subLetters(inputMask()); }
  std::vector<Letter> outputLetters() const { return subLetters(outputMask()); }

  int costOf(Letter mask) const;  // sum of costs of set bits
  std::string letterToString(Letter l) const;
  std::string maskToNames(Letter mask) const;  // comma separated

  bool operator==(const SignalTable&) const = default;

 private:
  std::vector<Signal> signals_;
};

// Letters sigma, sigma' agree outside `hidden` iff equal after clearing hidden bits.
inline Letter hideBits(Letter l, Letter hidden) { return l & ~hidden; }

}  // namespace hush
