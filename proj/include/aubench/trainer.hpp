#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aubench/fold_plan.hpp"
#include "aubench/metrics.hpp"
#include "aubench/models.hpp"
#include "aubench/sealed_test_set.hpp"
#include "aubench/task_data.hpp"

namespace aubench {

enum class StoppingMode { FIXED_EPOCH, ES_TEST, ES_VALIDATION };

const char* to_string(StoppingMode m);
StoppingMode stopping_from_string(const std::string& s);

struct TrainConfig {
  int max_epochs = 20;
  double lr = 1e-4;
  double weight_decay = 1e-3;
  int batch_size = 32;
  StoppingMode stopping = StoppingMode::FIXED_EPOCH;
  double val_fraction = 0.2;
  std::vector<uint64_t> seeds = {0, 1, 2, 3, 4};
  std::filesystem::path checkpoint_dir;  // empty: checkpoints stay in memory
};

struct EpochEntry {
  int epoch = 0;  // 1-based
  double train_loss = 0.0;
  std::optional<double> val_f1;
  std::optional<double> test_f1;  // leak-demo only
  std::string checkpoint_key;
};

struct EpochTrace {
  std::vector<EpochEntry> entries;

  std::string to_csv() const;
};

struct FoldRun {
  std::string fold_key;
  std::vector<int> test_idx;
  Eigen::MatrixXi pred;  // multilabel: rows x C; multiclass: rows x 1
  EpochTrace trace;
  int selected_epoch = 0;  // 0 when the model is not trainable
  std::vector<AccessRecord> access_log;
  LeakVerdict verdict;
};

// Trains one fold under the configured stopping regime.
//   FIXED_EPOCH   final-epoch checkpoint predicts
//   ES_VALIDATION checkpoint with best validation F1 predicts (earliest on
//                 ties); the validation split is subject-disjoint 80/20 on
//                 the training side
//   ES_TEST       checkpoint with best test F1 predicts; legal only in
//                 leak-demo mode and taints the run
FoldRun train_fold(const ModelSpec& spec, const TaskData& data, const Fold& fold,
                   const TrainConfig& cfg, GuardMode mode, uint64_t rng_stream);

struct RunProvenance {
  nlohmann::json config_echo;
  std::vector<std::pair<std::string, std::string>> data_digests;
  std::string vocab_checksum;
  std::string objective_map_checksum;
};

struct SeedRun {
  uint64_t seed = 0;
  std::vector<FoldRun> folds;
  ConfusionCounts pooled;
  MetricTable metrics;
};

struct RunReport {
  nlohmann::json provenance;
  TaskKind kind = TaskKind::multilabel_au;
  std::vector<std::string> class_names;
  Protocol protocol = Protocol::LODO;
  bool plan_rankable = true;
  GuardMode mode = GuardMode::guarded;
  int universe = 0;
  std::vector<SeedRun> seeds;
  MetricTable mean_metrics;  // mean over seeds, row-matched by (name, detail)
  bool clean = false;
  long n_violations = 0;

  bool rankable() const { return plan_rankable && clean; }
  nlohmann::json to_json() const;
};

void save_report(const RunReport& report, const std::filesystem::path& p);

// Recomputes the leak verdict of a stored report from its access logs;
// idempotent. Returns {clean, n_violations, mode string}.
struct AuditResult {
  bool clean = false;
  long n_violations = 0;
  std::string mode;
  bool matches_stored = true;
};
AuditResult audit_report_file(const std::filesystem::path& p);

// Runs every (seed, fold) cell, pools predictions per seed, computes the
// metric table and reports row-wise means over seeds. jobs > 1 parallelizes
// over cells; the reduction order is fixed, so results do not depend on it.
RunReport run_protocol(const ModelSpec& spec, const FoldPlan& plan,
                       const TaskData& data, const TrainConfig& cfg,
                       GuardMode mode, const RunProvenance& provenance,
                       int jobs = 1);

// Versioned parameter blob ("MECK"), used when checkpoint_dir is set.
void save_checkpoint(const std::filesystem::path& p, const Eigen::VectorXd& theta);
Eigen::VectorXd load_checkpoint(const std::filesystem::path& p);

}  // namespace aubench
