#pragma once

#include <string>
#include <vector>

namespace braidforge {

// One verified identity: status is "pass", "fail" or "skipped".
struct Check {
  std::string name;
  std::string anchor;
  std::string status;
  std::string witness;
};

inline Check make_check(std::string name, std::string anchor, bool ok, std::string witness = {}) {
  return {std::move(name), std::move(anchor), ok ? "pass" : "fail", std::move(witness)};
}

inline Check skipped_check(std::string name, std::string anchor, std::string why) {
  return {std::move(name), std::move(anchor), "skipped", std::move(why)};
}

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

}  // namespace braidforge
