#pragma once

#include <string>
#include <vector>

namespace pdectl {

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Replays the resolution 0 -> A -> A^3 -> A^3 -> A -> A/m -> 0 built from
/// grad, curl and div on Q[d1,d2,d3].
std::vector<NamedCheck> derham_resolution_checks();

}  // namespace pdectl
