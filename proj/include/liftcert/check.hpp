#pragma once

#include <string>
#include <vector>

namespace liftcert {

/// One named, exactly-decided claim inside a certificate.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace liftcert
