#pragma once

#include <set>
#include <string>
#include <string_view>

namespace fsgss::testing {

// Field names present in a `name=value` state dump.
inline std::set<std::string> StateKeys(std::string_view state) {
  std::set<std::string> keys;
  std::size_t pos = 0;
  while (pos < state.size()) {
    std::size_t end = state.find('\n', pos);
    if (end == std::string_view::npos) {
      end = state.size();
    }
    const std::string_view line = state.substr(pos, end - pos);
    keys.emplace(line.substr(0, line.find('=')));
    pos = end + 1;
  }
  return keys;
}

// Parameter set each role may hold after an honest run.
inline const std::set<std::string> kSignatureKeys = {"m", "c", "e_cap", "r4", "r6", "s1", "s2"};

inline std::set<std::string> ExpectedSystemCenterKeys() { return {"p0", "n", "g2", "p1", "q1", "member", "y"}; }

inline std::set<std::string> ExpectedManagerKeys() {
  return {"p0", "n", "g2", "x", "y0", "member", "y", "k", "r1", "r2", "a", "s"};
}

inline std::set<std::string> ExpectedMemberKeys() {
  std::set<std::string> keys = {"p0", "n", "g2", "y0", "member", "x", "y", "b_prime", "b", "r1", "r2", "a", "s"};
  keys.insert(kSignatureKeys.begin(), kSignatureKeys.end());
  return keys;
}

inline std::set<std::string> ExpectedRecipientKeys() {
  std::set<std::string> keys = {"p0", "n", "g2", "y0"};
  keys.insert(kSignatureKeys.begin(), kSignatureKeys.end());
  return keys;
}

}  // namespace fsgss::testing
