#pragma once

#include <string>
#include <utility>
#include <vector>

namespace latsep {

// Four-valued verdict: bounded symbolic checks that pass only report
// "verified at bound k"; Unknown means a witness search came up empty and the
// check refuses to claim falsity.
enum class Verdict { True, False, VerifiedAtBound, Unknown };

inline std::string verdict_name(Verdict v, int bound = 0) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::VerifiedAtBound: return "verified-at-bound(" + std::to_string(bound) + ")";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

inline bool verdict_truthy(Verdict v) {
  return v == Verdict::True || v == Verdict::VerifiedAtBound;
}

struct CheckReport {
  std::string check;   // e.g. "subfit_L", "vsubfit"
  std::string target;  // lattice / view the verdict is about: "L", "BL", "def", ...
  Verdict verdict = Verdict::True;
  int bound = 0;  // meaningful when verdict == VerifiedAtBound

  std::string witness;  // short description; nonempty whenever verdict is False
  // Labeled payloads a reader (or test) can re-evaluate: element ids,
  // serialized symbolic sets, witness maps.
  std::vector<std::pair<std::string, std::string>> detail;
  std::vector<std::string> trace;

  CheckReport& note(std::string line) {
    trace.push_back(std::move(line));
    return *this;
  }
  CheckReport& put(std::string key, std::string value) {
    detail.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : detail)
      if (k == key) return &v;
    return nullptr;
  }
};

}  // namespace latsep
