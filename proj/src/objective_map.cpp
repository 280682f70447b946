#include "aubench/objective_map.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "aubench/checksum.hpp"
#include "aubench/error.hpp"

namespace aubench {

using nlohmann::json;

std::vector<std::string> ObjectiveMap::class_ids() const {
  std::vector<std::string> out;
  const auto add = [&](const std::string& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const auto& rule : rules) add(rule.class_id);
  add(fallback_class);
  return out;
}

std::string map_objective(const AuSet& aus, const ObjectiveMap& map) {
  for (const auto& rule : map.rules) {
    if (rule.exact) {
      if (aus == rule.when) return rule.class_id;
    } else {
      if (std::includes(aus.begin(), aus.end(), rule.when.begin(), rule.when.end()))
        return rule.class_id;
    }
  }
  return map.fallback_class;
}

ObjectiveMap load_objective_map(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot open objective map '" + p.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("objective map '" + p.string() + "': " + e.what());
  }
  ObjectiveMap map;
  try {
    map.map_id = j.at("map_id").get<std::string>();
    map.fallback_class = j.at("fallback").get<std::string>();
    for (const auto& rj : j.at("rules")) {
      ObjectiveRule rule;
      for (const auto& tok : rj.at("when")) rule.when.insert(parse_au(tok.get<std::string>()));
      const auto kind = rj.value("kind", "exact");
      if (kind == "exact") {
        rule.exact = true;
      } else if (kind == "subset") {
        rule.exact = false;
      } else {
        throw ConfigError("objective map '" + p.string() + "': unknown rule kind '" + kind + "'");
      }
      rule.class_id = rj.at("class").get<std::string>();
      if (rule.when.empty())
        throw ConfigError("objective map '" + p.string() + "': rule with empty AU set");
      map.rules.push_back(std::move(rule));
    }
  } catch (const json::exception& e) {
    throw ConfigError("objective map '" + p.string() + "': " + e.what());
  }
  if (map.fallback_class.empty())
    throw ConfigError("objective map '" + p.string() + "': empty fallback class");
  return map;
}

std::string objective_map_checksum(const ObjectiveMap& map) {
  std::string joined = map.map_id + "|" + map.fallback_class;
  for (const auto& rule : map.rules) {
    joined += "|" + au_set_key(rule.when) + (rule.exact ? "=" : "<") + rule.class_id;
  }
  return hex_u64(fnv1a64(joined));
}

}  // namespace aubench
