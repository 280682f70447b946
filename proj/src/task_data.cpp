#include "aubench/task_data.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "aubench/checksum.hpp"
#include "aubench/error.hpp"
#include "aubench/label_matrix.hpp"
#include "aubench/rng.hpp"

namespace aubench {

StoreFeatureSource::StoreFeatureSource(std::shared_ptr<FeatureStore> store, int dim)
    : store_(std::move(store)), dim_(dim) {
  if (!store_) throw DataError("StoreFeatureSource: null store");
  if (dim_ <= 0) throw DataError("StoreFeatureSource: dim must be positive");
}

Eigen::VectorXd StoreFeatureSource::features_for(const Sample& s) const {
  const std::string& key = s.feature_ref ? *s.feature_ref : s.sample_id;
  const FeatureRecord rec = store_->load(key);
  if (static_cast<int>(rec.payload.size()) != dim_)
    throw DataError("feature record '" + key + "' has " +
                    std::to_string(rec.payload.size()) + " values, expected " +
                    std::to_string(dim_));
  Eigen::VectorXd out(dim_);
  for (int i = 0; i < dim_; ++i) out(i) = rec.payload[static_cast<size_t>(i)];
  return out;
}

SyntheticFeatureSource::SyntheticFeatureSource(int dim, double noise_sigma,
                                               uint64_t seed)
    : dim_(dim), noise_sigma_(noise_sigma), seed_(seed) {
  if (dim_ <= 0) throw DataError("SyntheticFeatureSource: dim must be positive");
}

Eigen::VectorXd SyntheticFeatureSource::features_for(const Sample& s) const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim_);
  for (const auto& au : s.au_set) {
    Rng au_rng(Rng::derive(seed_, 0x41550000ull + static_cast<uint64_t>(au.number)));
    for (int i = 0; i < dim_; ++i) x(i) += au_rng.normal();
  }
  Rng noise_rng(Rng::derive(seed_, fnv1a64(s.sample_id)));
  for (int i = 0; i < dim_; ++i) x(i) += noise_sigma_ * noise_rng.normal();
  return x;
}

namespace {

void fill_common(TaskData& task, const std::vector<DatasetTable>& tables,
                 const FeatureSource& source) {
  int n = 0;
  for (const auto& t : tables) n += static_cast<int>(t.samples.size());
  task.features.resize(n, source.dim());
  task.sample_ids.reserve(static_cast<size_t>(n));
  int row = 0;
  for (const auto& t : tables) {
    for (const auto& s : t.samples) {
      task.sample_ids.push_back(s.sample_id);
      task.subject_keys.push_back(s.subject_key());
      task.dataset_ids.push_back(s.dataset_id);
      task.features.row(row) = source.features_for(s).transpose();
      ++row;
    }
  }
}

}  // namespace

TaskData make_au_task(const std::vector<DatasetTable>& tables,
                      const AuVocabulary& vocab, const FeatureSource& source) {
  if (tables.empty()) throw DataError("make_au_task: no tables");
  TaskData task;
  task.kind = TaskKind::multilabel_au;
  task.class_names = vocab.tokens();
  fill_common(task, tables, source);
  std::vector<Sample> all;
  for (const auto& t : tables)
    all.insert(all.end(), t.samples.begin(), t.samples.end());
  task.labels = encode_labels(all, vocab).matrix.values;
  return task;
}

TaskData make_multiclass_task(const std::vector<DatasetTable>& tables,
                              const std::vector<std::string>& class_names,
                              const std::vector<int>& class_index,
                              const FeatureSource& source) {
  if (tables.empty()) throw DataError("make_multiclass_task: no tables");
  TaskData task;
  task.kind = TaskKind::multiclass;
  task.class_names = class_names;
  fill_common(task, tables, source);
  if (class_index.size() != task.sample_ids.size())
    throw DataError("make_multiclass_task: class index length mismatch");
  task.labels.resize(static_cast<Eigen::Index>(class_index.size()), 1);
  for (size_t i = 0; i < class_index.size(); ++i) {
    if (class_index[i] < 0 || class_index[i] >= task.n_classes())
      throw DataError("make_multiclass_task: class index out of range");
    task.labels(static_cast<Eigen::Index>(i), 0) = class_index[i];
  }
  return task;
}

TaskData make_objective_task(const std::vector<DatasetTable>& tables,
                             const ObjectiveMap& map, const FeatureSource& source) {
  const auto class_names = map.class_ids();
  std::map<std::string, int> index;
  for (size_t i = 0; i < class_names.size(); ++i)
    index[class_names[i]] = static_cast<int>(i);
  std::vector<int> class_index;
  for (const auto& t : tables)
    for (const auto& s : t.samples)
      class_index.push_back(index.at(map_objective(s.au_set, map)));
  return make_multiclass_task(tables, class_names, class_index, source);
}

TaskData make_emotion_task(const std::vector<DatasetTable>& tables,
                           const FeatureSource& source) {
  std::set<std::string> classes;
  for (const auto& t : tables)
    for (const auto& s : t.samples) {
      if (!s.emotion)
        throw DataError("make_emotion_task: sample '" + s.sample_id +
                        "' has no emotion label");
      classes.insert(*s.emotion);
    }
  const std::vector<std::string> class_names(classes.begin(), classes.end());
  std::map<std::string, int> index;
  for (size_t i = 0; i < class_names.size(); ++i)
    index[class_names[i]] = static_cast<int>(i);
  std::vector<int> class_index;
  for (const auto& t : tables)
    for (const auto& s : t.samples) class_index.push_back(index.at(*s.emotion));
  return make_multiclass_task(tables, class_names, class_index, source);
}

}  // namespace aubench
