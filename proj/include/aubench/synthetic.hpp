#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aubench/dataset.hpp"

namespace aubench {

// Deterministic emotion labelling for synthetic tables. index_of must be a
// pure function of the AU set.
struct EmotionRule {
  std::vector<std::string> classes;
  std::function<size_t(const AuSet&)> index_of;

  static EmotionRule none();
  // Built-in rule: a fixed hash of the AU numbers picks one of n classes.
  static EmotionRule au_hash(int n_classes);

  bool enabled() const { return !classes.empty(); }
};

struct SyntheticDatasetSpec {
  std::string dataset_id;
  int n_samples = 0;
  int n_subjects = 1;
  // Exact number of samples carrying each AU; counts are hit exactly, never
  // merely in expectation.
  std::vector<std::pair<AuCode, int>> au_counts;
};

struct SyntheticSpec {
  std::vector<SyntheticDatasetSpec> datasets;
  EmotionRule emotion = EmotionRule::none();
  double noise_rate = 0.0;  // fraction of emotion labels resampled
  uint64_t seed = 0;
};

// Generates one table per dataset spec. AU instances are dealt to the least
// loaded samples first, so when the summed counts reach n_samples every
// sample ends up with at least one AU. Subjects are assigned round-robin.
// Identical spec -> byte-identical tables.
std::vector<DatasetTable> generate_synthetic(const SyntheticSpec& spec);

DatasetTable generate_synthetic_single(const SyntheticDatasetSpec& ds,
                                       uint64_t seed,
                                       const EmotionRule& emotion = EmotionRule::none(),
                                       double noise_rate = 0.0);

// Loads a marginal spec from JSON:
//   {"seed": 7, "noise_rate": 0.0, "emotion_classes": 0,
//    "datasets": [{"id": "C1", "samples": 189, "subjects": 19,
//                  "aus": {"AU1": 23, ...}}, ...]}
SyntheticSpec load_synthetic_spec(const std::filesystem::path& p);
SyntheticSpec synthetic_spec_from_json(const nlohmann::json& j);

}  // namespace aubench
