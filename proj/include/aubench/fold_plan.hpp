#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "aubench/dataset.hpp"

namespace aubench {

enum class Protocol { LOSO, LODO, HOLDOUT, PDE };

const char* to_string(Protocol p);
Protocol protocol_from_string(const std::string& s);

struct Fold {
  std::vector<int> train_idx;
  std::vector<int> test_idx;
  std::string fold_key;  // subject key or dataset id
};

// Indices refer to the concatenation of the generating tables, in table
// order. For LOSO/LODO the test sets partition the universe.
struct FoldPlan {
  Protocol protocol = Protocol::LOSO;
  std::vector<Fold> folds;
  int universe = 0;
  // PDE plans are didactic only and never enter ranking sections.
  bool rankable = true;
};

// Flattened view of a table list in concatenation order.
struct SampleIndex {
  std::vector<std::string> sample_ids;
  std::vector<std::string> subject_keys;
  std::vector<std::string> dataset_ids;

  int size() const { return static_cast<int>(sample_ids.size()); }
  static SampleIndex build(const std::vector<DatasetTable>& tables);
};

// One fold per distinct (dataset, subject) key, ordered by key. Throws when
// only one subject exists ("degenerate plan: empty training set").
FoldPlan make_loso(const std::vector<DatasetTable>& tables);

// One fold per table in input order; fold k tests table k, trains the rest.
FoldPlan make_lodo(const std::vector<DatasetTable>& tables);

// Single cross-dataset fold. Throws when both sides are the same dataset.
FoldPlan make_holdout(const DatasetTable& train, const DatasetTable& test);

// Like make_holdout with several training tables. Index space is
// [train_tables..., test] in that order.
FoldPlan make_holdout_multi(const std::vector<DatasetTable>& train_tables,
                            const DatasetTable& test);

// LOSO restricted to subjects of the named datasets; every sample of other
// tables joins each fold's training side. Used by composite tasks that admit
// auxiliary training data.
FoldPlan make_loso_subset(const std::vector<DatasetTable>& tables,
                          const std::vector<std::string>& eval_dataset_ids);

// Person-dependent split (didactic, non-rankable): per-dataset stratified
// random test fraction.
FoldPlan make_pde(const std::vector<DatasetTable>& tables, double test_fraction,
                  uint64_t seed);

// Number of times samples are touched across a plan: folds x universe.
long training_cost(const FoldPlan& plan);

// Checks fold disjointness, the LOSO/LODO partition property and
// subject/dataset disjointness against the generating tables. Throws on any
// violation.
void validate_plan(const FoldPlan& plan, const std::vector<DatasetTable>& tables);

void save_plan(const FoldPlan& plan, const std::filesystem::path& p);
FoldPlan load_plan(const std::filesystem::path& p);
std::string plan_digest(const FoldPlan& plan);

}  // namespace aubench
