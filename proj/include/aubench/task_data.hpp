#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "aubench/dataset.hpp"
#include "aubench/feature_store.hpp"
#include "aubench/objective_map.hpp"
#include "aubench/vocabulary.hpp"

namespace aubench {

enum class TaskKind { multilabel_au, multiclass };

// Feature and label matrices aligned with the concatenation of the source
// tables; the same index space fold plans use.
struct TaskData {
  TaskKind kind = TaskKind::multilabel_au;
  std::vector<std::string> sample_ids;
  std::vector<std::string> subject_keys;
  std::vector<std::string> dataset_ids;
  Eigen::MatrixXd features;  // n x d
  Eigen::MatrixXi labels;    // multilabel: n x C; multiclass: n x 1 indices
  std::vector<std::string> class_names;

  int n() const { return static_cast<int>(features.rows()); }
  int dim() const { return static_cast<int>(features.cols()); }
  int n_classes() const { return static_cast<int>(class_names.size()); }
};

class FeatureSource {
 public:
  virtual ~FeatureSource() = default;
  virtual int dim() const = 0;
  virtual Eigen::VectorXd features_for(const Sample& s) const = 0;
};

// Looks up precomputed descriptors by feature_ref (falling back to
// sample_id). Payloads are flattened to doubles.
class StoreFeatureSource final : public FeatureSource {
 public:
  StoreFeatureSource(std::shared_ptr<FeatureStore> store, int dim);
  int dim() const override { return dim_; }
  Eigen::VectorXd features_for(const Sample& s) const override;

 private:
  std::shared_ptr<FeatureStore> store_;
  int dim_;
};

// Synthetic descriptors for desk-scale studies: each AU contributes a fixed
// random embedding vector and per-sample Gaussian noise is added. Both pieces
// are derived from hashes, so features do not depend on sample order.
class SyntheticFeatureSource final : public FeatureSource {
 public:
  SyntheticFeatureSource(int dim, double noise_sigma, uint64_t seed);
  int dim() const override { return dim_; }
  Eigen::VectorXd features_for(const Sample& s) const override;

 private:
  int dim_;
  double noise_sigma_;
  uint64_t seed_;
};

TaskData make_au_task(const std::vector<DatasetTable>& tables,
                      const AuVocabulary& vocab, const FeatureSource& source);

TaskData make_multiclass_task(const std::vector<DatasetTable>& tables,
                              const std::vector<std::string>& class_names,
                              const std::vector<int>& class_index,  // per sample
                              const FeatureSource& source);

// Objective classes from AU sets; class list comes from the map.
TaskData make_objective_task(const std::vector<DatasetTable>& tables,
                             const ObjectiveMap& map, const FeatureSource& source);

// Emotion labels must be present on every sample.
TaskData make_emotion_task(const std::vector<DatasetTable>& tables,
                           const FeatureSource& source);

}  // namespace aubench
