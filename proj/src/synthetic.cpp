#include "aubench/synthetic.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "aubench/error.hpp"
#include "aubench/rng.hpp"

namespace aubench {

using nlohmann::json;

EmotionRule EmotionRule::none() { return {}; }

EmotionRule EmotionRule::au_hash(int n_classes) {
  EmotionRule rule;
  for (int i = 0; i < n_classes; ++i) rule.classes.push_back("emo" + std::to_string(i));
  rule.index_of = [n_classes](const AuSet& aus) {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& au : aus)
      h = detail::mix64(h ^ (static_cast<uint64_t>(au.number) * 2654435761ull));
    return static_cast<size_t>(h % static_cast<uint64_t>(n_classes));
  };
  return rule;
}

DatasetTable generate_synthetic_single(const SyntheticDatasetSpec& ds,
                                       uint64_t seed, const EmotionRule& emotion,
                                       double noise_rate) {
  if (ds.n_samples <= 0)
    throw DataError("synthetic spec for '" + ds.dataset_id + "': n_samples must be positive");
  if (ds.n_subjects <= 0)
    throw DataError("synthetic spec for '" + ds.dataset_id + "': n_subjects must be positive");

  const int n = ds.n_samples;
  Rng rng(seed);

  DatasetTable table;
  table.dataset_id = ds.dataset_id;
  table.samples.resize(n);
  int subject_digits = 1;
  for (int v = ds.n_subjects; v >= 10; v /= 10) ++subject_digits;
  for (int i = 0; i < n; ++i) {
    Sample& s = table.samples[static_cast<size_t>(i)];
    s.dataset_id = ds.dataset_id;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s_s%04d", ds.dataset_id.c_str(), i);
    s.sample_id = buf;
    std::snprintf(buf, sizeof(buf), "s%0*d", subject_digits, i % ds.n_subjects);
    s.subject_id = buf;
    s.onset = 5 + i % 7;
    s.apex = s.onset + 3 + i % 5;
    s.offset = s.apex + 2 + i % 6;
  }

  // Deal each AU's instances to the least-loaded samples, randomly among
  // ties. Zero-load samples always win ties, so total counts >= n_samples
  // guarantees a nonempty AU set everywhere.
  std::vector<int> load(static_cast<size_t>(n), 0);
  std::vector<int> order(static_cast<size_t>(n));
  for (const auto& [au, count] : ds.au_counts) {
    if (count < 0 || count > n)
      throw DataError("infeasible synthetic spec: " + au.token() + " count " +
                      std::to_string(count) + " exceeds n_samples " +
                      std::to_string(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<uint64_t> tie(static_cast<size_t>(n));
    for (auto& t : tie) t = rng.next_u64();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const auto ka = std::make_pair(load[static_cast<size_t>(a)], tie[static_cast<size_t>(a)]);
      const auto kb = std::make_pair(load[static_cast<size_t>(b)], tie[static_cast<size_t>(b)]);
      return ka < kb;
    });
    for (int k = 0; k < count; ++k) {
      const int target = order[static_cast<size_t>(k)];
      table.samples[static_cast<size_t>(target)].au_set.insert(au);
      ++load[static_cast<size_t>(target)];
    }
  }

  if (emotion.enabled()) {
    const auto n_classes = emotion.classes.size();
    for (auto& s : table.samples) {
      size_t idx = emotion.index_of(s.au_set) % n_classes;
      if (noise_rate > 0.0 && n_classes > 1 && rng.unit() < noise_rate) {
        // resample to a different class
        size_t other = rng.below(n_classes - 1);
        if (other >= idx) ++other;
        idx = other;
      }
      s.emotion = emotion.classes[idx];
    }
  }

  validate(table);
  return table;
}

std::vector<DatasetTable> generate_synthetic(const SyntheticSpec& spec) {
  std::vector<DatasetTable> tables;
  tables.reserve(spec.datasets.size());
  for (size_t i = 0; i < spec.datasets.size(); ++i) {
    tables.push_back(generate_synthetic_single(spec.datasets[i],
                                               Rng::derive(spec.seed, i),
                                               spec.emotion, spec.noise_rate));
  }
  return tables;
}

SyntheticSpec load_synthetic_spec(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot open synthetic spec '" + p.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("synthetic spec '" + p.string() + "': " + e.what());
  }
  return synthetic_spec_from_json(j);
}

SyntheticSpec synthetic_spec_from_json(const nlohmann::json& j) {
  SyntheticSpec spec;
  try {
    spec.seed = j.value("seed", 0ull);
    spec.noise_rate = j.value("noise_rate", 0.0);
    const int emotion_classes = j.value("emotion_classes", 0);
    if (emotion_classes > 0) spec.emotion = EmotionRule::au_hash(emotion_classes);
    for (const auto& dj : j.at("datasets")) {
      SyntheticDatasetSpec ds;
      ds.dataset_id = dj.at("id").get<std::string>();
      ds.n_samples = dj.at("samples").get<int>();
      ds.n_subjects = dj.at("subjects").get<int>();
      for (const auto& [token, count] : dj.at("aus").items())
        ds.au_counts.emplace_back(parse_au(token), count.get<int>());
      spec.datasets.push_back(std::move(ds));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("synthetic spec: ") + e.what());
  }
  return spec;
}

}  // namespace aubench
