#include "aubench/fold_plan.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "aubench/checksum.hpp"
#include "aubench/error.hpp"
#include "aubench/rng.hpp"

namespace aubench {

using nlohmann::json;

const char* to_string(Protocol p) {
  switch (p) {
    case Protocol::LOSO: return "LOSO";
    case Protocol::LODO: return "LODO";
    case Protocol::HOLDOUT: return "HOLDOUT";
    case Protocol::PDE: return "PDE";
  }
  return "unknown";
}

Protocol protocol_from_string(const std::string& s) {
  if (s == "LOSO" || s == "loso") return Protocol::LOSO;
  if (s == "LODO" || s == "lodo") return Protocol::LODO;
  if (s == "HOLDOUT" || s == "holdout") return Protocol::HOLDOUT;
  if (s == "PDE" || s == "pde") return Protocol::PDE;
  throw ConfigError("unknown protocol '" + s + "'");
}

SampleIndex SampleIndex::build(const std::vector<DatasetTable>& tables) {
  SampleIndex ix;
  for (const auto& t : tables) {
    for (const auto& s : t.samples) {
      ix.sample_ids.push_back(s.sample_id);
      ix.subject_keys.push_back(s.subject_key());
      ix.dataset_ids.push_back(s.dataset_id);
    }
  }
  return ix;
}

namespace {

std::vector<int> complement(int universe, const std::set<int>& taken) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(universe) - taken.size());
  for (int i = 0; i < universe; ++i)
    if (!taken.count(i)) out.push_back(i);
  return out;
}

}  // namespace

FoldPlan make_loso(const std::vector<DatasetTable>& tables) {
  const auto ix = SampleIndex::build(tables);
  if (ix.size() == 0) throw DataError("make_loso: no samples");
  std::map<std::string, std::vector<int>> by_subject;
  for (int i = 0; i < ix.size(); ++i) by_subject[ix.subject_keys[i]].push_back(i);
  if (by_subject.size() < 2)
    throw DataError("make_loso: degenerate plan: empty training set");
  FoldPlan plan;
  plan.protocol = Protocol::LOSO;
  plan.universe = ix.size();
  for (const auto& [key, test_idx] : by_subject) {
    Fold fold;
    fold.fold_key = key;
    fold.test_idx = test_idx;
    fold.train_idx = complement(plan.universe, {test_idx.begin(), test_idx.end()});
    plan.folds.push_back(std::move(fold));
  }
  return plan;
}

FoldPlan make_lodo(const std::vector<DatasetTable>& tables) {
  if (tables.size() < 2) throw DataError("make_lodo: need at least 2 tables");
  FoldPlan plan;
  plan.protocol = Protocol::LODO;
  int total = 0;
  std::vector<std::pair<int, int>> ranges;  // [begin, end) per table
  for (const auto& t : tables) {
    ranges.emplace_back(total, total + static_cast<int>(t.samples.size()));
    total += static_cast<int>(t.samples.size());
  }
  plan.universe = total;
  std::set<std::string> seen_ids;
  for (size_t k = 0; k < tables.size(); ++k) {
    if (!seen_ids.insert(tables[k].dataset_id).second)
      throw DataError("make_lodo: duplicate dataset id '" + tables[k].dataset_id + "'");
    Fold fold;
    fold.fold_key = tables[k].dataset_id;
    for (int i = ranges[k].first; i < ranges[k].second; ++i) fold.test_idx.push_back(i);
    fold.train_idx = complement(total, {fold.test_idx.begin(), fold.test_idx.end()});
    plan.folds.push_back(std::move(fold));
  }
  return plan;
}

FoldPlan make_holdout(const DatasetTable& train, const DatasetTable& test) {
  return make_holdout_multi({train}, test);
}

FoldPlan make_holdout_multi(const std::vector<DatasetTable>& train_tables,
                            const DatasetTable& test) {
  if (train_tables.empty()) throw DataError("make_holdout: no training tables");
  FoldPlan plan;
  plan.protocol = Protocol::HOLDOUT;
  Fold fold;
  fold.fold_key = test.dataset_id;
  int offset = 0;
  for (const auto& t : train_tables) {
    if (t.dataset_id == test.dataset_id)
      throw DataError("make_holdout: dataset '" + test.dataset_id +
                      "' appears on both sides");
    for (size_t i = 0; i < t.samples.size(); ++i) fold.train_idx.push_back(offset++);
  }
  for (size_t i = 0; i < test.samples.size(); ++i) fold.test_idx.push_back(offset++);
  plan.universe = offset;
  plan.folds.push_back(std::move(fold));
  return plan;
}

FoldPlan make_loso_subset(const std::vector<DatasetTable>& tables,
                          const std::vector<std::string>& eval_dataset_ids) {
  const auto ix = SampleIndex::build(tables);
  const std::set<std::string> eval_ids(eval_dataset_ids.begin(), eval_dataset_ids.end());
  for (const auto& id : eval_ids) {
    const bool known = std::any_of(tables.begin(), tables.end(),
                                   [&](const auto& t) { return t.dataset_id == id; });
    if (!known) throw DataError("make_loso_subset: unknown dataset '" + id + "'");
  }
  std::map<std::string, std::vector<int>> by_subject;
  for (int i = 0; i < ix.size(); ++i)
    if (eval_ids.count(ix.dataset_ids[static_cast<size_t>(i)]))
      by_subject[ix.subject_keys[static_cast<size_t>(i)]].push_back(i);
  if (by_subject.size() < 2)
    throw DataError("make_loso_subset: degenerate plan: empty training set");
  FoldPlan plan;
  plan.protocol = Protocol::LOSO;
  plan.universe = ix.size();
  for (const auto& [key, test_idx] : by_subject) {
    Fold fold;
    fold.fold_key = key;
    fold.test_idx = test_idx;
    fold.train_idx = complement(plan.universe, {test_idx.begin(), test_idx.end()});
    plan.folds.push_back(std::move(fold));
  }
  return plan;
}

FoldPlan make_pde(const std::vector<DatasetTable>& tables, double test_fraction,
                  uint64_t seed) {
  if (test_fraction <= 0.0 || test_fraction >= 1.0)
    throw DataError("make_pde: test fraction must be in (0, 1)");
  FoldPlan plan;
  plan.protocol = Protocol::PDE;
  plan.rankable = false;
  Fold fold;
  fold.fold_key = "pde";
  Rng rng(seed);
  int offset = 0;
  for (const auto& t : tables) {
    std::vector<int> idx(t.samples.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = offset + static_cast<int>(i);
    rng.shuffle(idx);
    const auto n_test = std::max<size_t>(1, static_cast<size_t>(
        test_fraction * static_cast<double>(idx.size()) + 0.5));
    for (size_t i = 0; i < idx.size(); ++i)
      (i < n_test ? fold.test_idx : fold.train_idx).push_back(idx[i]);
    offset += static_cast<int>(t.samples.size());
  }
  plan.universe = offset;
  std::sort(fold.test_idx.begin(), fold.test_idx.end());
  std::sort(fold.train_idx.begin(), fold.train_idx.end());
  if (fold.train_idx.empty() || fold.test_idx.empty())
    throw DataError("make_pde: degenerate split");
  plan.folds.push_back(std::move(fold));
  return plan;
}

long training_cost(const FoldPlan& plan) {
  return static_cast<long>(plan.folds.size()) * static_cast<long>(plan.universe);
}

void validate_plan(const FoldPlan& plan, const std::vector<DatasetTable>& tables) {
  const auto ix = SampleIndex::build(tables);
  if (ix.size() != plan.universe)
    throw DataError("plan universe does not match tables");
  std::vector<int> all_test;
  for (const auto& fold : plan.folds) {
    std::set<int> train(fold.train_idx.begin(), fold.train_idx.end());
    for (int i : fold.test_idx) {
      if (i < 0 || i >= plan.universe)
        throw DataError("plan: test index out of range");
      if (train.count(i))
        throw DataError("plan: fold '" + fold.fold_key + "' has overlapping train/test");
    }
    for (int i : fold.train_idx)
      if (i < 0 || i >= plan.universe)
        throw DataError("plan: train index out of range");

    if (plan.protocol == Protocol::LOSO || plan.protocol == Protocol::LODO) {
      const bool by_dataset = plan.protocol == Protocol::LODO;
      std::set<std::string> train_keys, test_keys;
      for (int i : fold.train_idx)
        train_keys.insert(by_dataset ? ix.dataset_ids[static_cast<size_t>(i)]
                                     : ix.subject_keys[static_cast<size_t>(i)]);
      for (int i : fold.test_idx)
        test_keys.insert(by_dataset ? ix.dataset_ids[static_cast<size_t>(i)]
                                    : ix.subject_keys[static_cast<size_t>(i)]);
      for (const auto& key : test_keys)
        if (train_keys.count(key))
          throw DataError("plan: fold '" + fold.fold_key + "' leaks key '" + key +
                          "' across train/test");
    }
    all_test.insert(all_test.end(), fold.test_idx.begin(), fold.test_idx.end());
  }
  if (plan.protocol == Protocol::LOSO || plan.protocol == Protocol::LODO) {
    std::sort(all_test.begin(), all_test.end());
    if (static_cast<int>(all_test.size()) != plan.universe)
      throw DataError("plan: test sets do not partition the universe");
    for (int i = 0; i < plan.universe; ++i)
      if (all_test[static_cast<size_t>(i)] != i)
        throw DataError("plan: test sets do not partition the universe");
  }
}

namespace {

json plan_to_json(const FoldPlan& plan) {
  json j;
  j["kind"] = "fold-plan";
  j["protocol"] = to_string(plan.protocol);
  j["universe"] = plan.universe;
  j["rankable"] = plan.rankable;
  json folds = json::array();
  for (const auto& fold : plan.folds) {
    json fj;
    fj["key"] = fold.fold_key;
    fj["train"] = fold.train_idx;
    fj["test"] = fold.test_idx;
    folds.push_back(std::move(fj));
  }
  j["folds"] = std::move(folds);
  return j;
}

}  // namespace

void save_plan(const FoldPlan& plan, const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw Error("cannot write plan file '" + p.string() + "'");
  out << plan_to_json(plan).dump(2) << '\n';
}

FoldPlan load_plan(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot open plan file '" + p.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("plan file '" + p.string() + "': " + e.what());
  }
  if (j.value("kind", "") != "fold-plan")
    throw ConfigError("'" + p.string() + "' is not a fold plan file");
  FoldPlan plan;
  plan.protocol = protocol_from_string(j.at("protocol").get<std::string>());
  plan.universe = j.at("universe").get<int>();
  plan.rankable = j.value("rankable", true);
  for (const auto& fj : j.at("folds")) {
    Fold fold;
    fold.fold_key = fj.at("key").get<std::string>();
    fold.train_idx = fj.at("train").get<std::vector<int>>();
    fold.test_idx = fj.at("test").get<std::vector<int>>();
    plan.folds.push_back(std::move(fold));
  }
  return plan;
}

std::string plan_digest(const FoldPlan& plan) {
  return hex_u64(fnv1a64(plan_to_json(plan).dump()));
}

}  // namespace aubench
