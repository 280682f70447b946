#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "aubench/au_code.hpp"

namespace aubench {

// One mapping rule: matches when the sample's AU set equals `when` (exact) or
// contains it (subset). Rules are evaluated in file order; the first match
// wins and the fallback class makes the map total.
struct ObjectiveRule {
  AuSet when;
  bool exact = true;
  std::string class_id;
};

struct ObjectiveMap {
  std::string map_id;
  std::vector<ObjectiveRule> rules;
  std::string fallback_class;

  // Distinct class ids in deterministic order (rule order, fallback last).
  std::vector<std::string> class_ids() const;
};

std::string map_objective(const AuSet& aus, const ObjectiveMap& map);

ObjectiveMap load_objective_map(const std::filesystem::path& p);
std::string objective_map_checksum(const ObjectiveMap& map);

}  // namespace aubench
