#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hush/privacy.hpp"

namespace hush {

// Line-oriented problem files:
//   inputs: a, b
//   outputs: x, y
//   cost: a=1, b=2, x=0        (unlisted signals cost 1)
//   budget: 2
//   spec: <LTL>                or  spec hoa: <path>
//   secret: <LTL>              or  secret hoa: <path>
//   secret if <LTL> : <LTL>    (trigger before the colon)
//   observer: plain|knows-spec
// '#' starts a comment; HOA paths are resolved against `baseDir`.
PrivacyProblem parseProblem(const std::string& text, const std::string& baseDir = ".");
PrivacyProblem parseProblemFile(const std::string& path);

enum class Verdict { Realizable, Unrealizable, Hidden, Revealed, Unknown };

struct RunReport {
  Verdict verdict = Verdict::Unknown;
  Letter hideMask = 0;
  std::vector<std::string> artifacts;
  double parseSec = 0, solveSec = 0;
  std::vector<std::pair<Letter, bool>> candidateLog;  // (hide-set, game won)

  std::string toString(const SignalTable& table) const;
};

}  // namespace hush
