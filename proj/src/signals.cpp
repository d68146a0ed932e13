#include "hush/signals.hpp"

#include <algorithm>
#include <stdexcept>

namespace hush {

int SignalTable::add(std::string name, SignalKind kind, int cost) {
  if (find(name)) throw std::runtime_error("duplicate signal name: " + name);
  if (cost < 0) throw std::runtime_error("negative cost for signal: " + name);
  if (size() >= 20) throw std::runtime_error("too many signals (limit 20)");
  signals_.push_back(Signal{std::move(name), kind, cost});
  return size() - 1;
}

std::optional<int> SignalTable::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (signals_[i].name == name) return i;
  return std::nullopt;
}

Letter SignalTable::inputMask() const {
  Letter m = 0;
  for (int i = 0; i < size(); ++i)
    if (signals_[i].kind == SignalKind::Input) m |= Letter(1) << i;
  return m;
}

Letter SignalTable::outputMask() const {
  Letter m = 0;
  for (int i = 0; i < size(); ++i)
    if (signals_[i].kind == SignalKind::Output) m |= Letter(1) << i;
  return m;
}

std::vector<int> SignalTable::inputs() const {
  std::vector<int> r;
  for (int i = 0; i < size(); ++i)
    if (signals_[i].kind == SignalKind::Input) r.push_back(i);
  return r;
}

std::vector<int> SignalTable::outputs() const {
  std::vector<int> r;
  for (int i = 0; i < size(); ++i)
    if (signals_[i].kind == SignalKind::Output) r.push_back(i);
  return r;
}

std::vector<Letter> SignalTable::subLetters(Letter mask) {
  std::vector<int> bits;
  for (int i = 0; i < 32; ++i)
    if (mask & (Letter(1) << i)) bits.push_back(i);
  std::vector<Letter> out;
  out.reserve(size_t(1) << bits.size());
  for (uint32_t k = 0; k < (uint32_t(1) << bits.size()); ++k) {
    Letter l = 0;
    for (size_t j = 0; j < bits.size(); ++j)
      if (k & (uint32_t(1) << j)) l |= Letter(1) << bits[j];
    out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int SignalTable::costOf(Letter mask) const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    if (mask & (Letter(1) << i)) c += signals_[i].cost;
  return c;
}

std::string SignalTable::letterToString(Letter l) const {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (l & (Letter(1) << i)) {
      if (!first) s += ",";
      s += signals_[i].name;
      first = false;
    }
  }
  s += "}";
  return s;
}

std::string SignalTable::maskToNames(Letter mask) const {
  std::string s;
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (mask & (Letter(1) << i)) {
      if (!first) s += ",";
      s += signals_[i].name;
      first = false;
    }
  }
  return s;
}

}  // namespace hush
