#include "aubench/metrics.hpp"

#include <sstream>

#include "aubench/error.hpp"
#include "aubench/text.hpp"

namespace aubench {

ConfusionCounts confusion_multilabel(const Eigen::MatrixXi& truth,
                                     const Eigen::MatrixXi& pred,
                                     const std::vector<std::string>& class_names) {
  if (truth.rows() != pred.rows() || truth.cols() != pred.cols())
    throw DataError("confusion_multilabel: shape mismatch");
  if (static_cast<size_t>(truth.cols()) != class_names.size())
    throw DataError("confusion_multilabel: class name count mismatch");
  ConfusionCounts c;
  c.classes = class_names;
  c.counts.resize(class_names.size());
  for (Eigen::Index col = 0; col < truth.cols(); ++col) {
    auto& k = c.counts[static_cast<size_t>(col)];
    for (Eigen::Index row = 0; row < truth.rows(); ++row) {
      const bool t = truth(row, col) != 0;
      const bool p = pred(row, col) != 0;
      if (t && p) ++k.tp;
      else if (!t && p) ++k.fp;
      else if (t && !p) ++k.fn;
      else ++k.tn;
    }
  }
  return c;
}

ConfusionCounts confusion_multiclass(const std::vector<int>& truth,
                                     const std::vector<int>& pred,
                                     const std::vector<std::string>& class_names) {
  if (truth.size() != pred.size())
    throw DataError("confusion_multiclass: length mismatch");
  const int n_classes = static_cast<int>(class_names.size());
  ConfusionCounts c;
  c.classes = class_names;
  c.counts.resize(class_names.size());
  for (size_t i = 0; i < truth.size(); ++i) {
    const int t = truth[i];
    const int p = pred[i];
    if (t < 0 || t >= n_classes || p < 0 || p >= n_classes)
      throw DataError("confusion_multiclass: class index out of range");
    for (int cls = 0; cls < n_classes; ++cls) {
      auto& k = c.counts[static_cast<size_t>(cls)];
      const bool tt = t == cls;
      const bool pp = p == cls;
      if (tt && pp) ++k.tp;
      else if (!tt && pp) ++k.fp;
      else if (tt && !pp) ++k.fn;
      else ++k.tn;
    }
  }
  return c;
}

double f1_binary(const ClassCounts& c) {
  const long denom = 2 * c.tp + c.fp + c.fn;
  if (denom == 0) return 0.0;
  return 2.0 * static_cast<double>(c.tp) / static_cast<double>(denom);
}

double f1_harmonic(const ClassCounts& c) {
  const long pred_pos = c.tp + c.fp;
  const long actual_pos = c.tp + c.fn;
  const double pr = pred_pos == 0 ? 0.0 : static_cast<double>(c.tp) / pred_pos;
  const double re = actual_pos == 0 ? 0.0 : static_cast<double>(c.tp) / actual_pos;
  if (pr + re == 0.0) return 0.0;
  return 2.0 * pr * re / (pr + re);
}

double f1_macro(const ConfusionCounts& c) {
  if (c.counts.empty()) throw DataError("f1_macro: no classes");
  double sum = 0.0;
  for (const auto& k : c.counts) sum += f1_binary(k);
  return sum / static_cast<double>(c.counts.size());
}

double f1_micro(const ConfusionCounts& c) {
  if (c.counts.empty()) throw DataError("f1_micro: no classes");
  ClassCounts pooled;
  for (const auto& k : c.counts) {
    pooled.tp += k.tp;
    pooled.fp += k.fp;
    pooled.fn += k.fn;
    pooled.tn += k.tn;
  }
  return f1_binary(pooled);
}

double f1_weighted(const ConfusionCounts& c) {
  if (c.counts.empty()) throw DataError("f1_weighted: no classes");
  long total_support = 0;
  double sum = 0.0;
  for (const auto& k : c.counts) {
    total_support += k.support();
    sum += static_cast<double>(k.support()) * f1_binary(k);
  }
  if (total_support == 0) return 0.0;
  return sum / static_cast<double>(total_support);
}

double uar(const ConfusionCounts& c, std::vector<std::string>* zero_support) {
  if (c.counts.empty()) throw DataError("uar: no classes");
  double sum = 0.0;
  for (size_t i = 0; i < c.counts.size(); ++i) {
    const auto& k = c.counts[i];
    if (k.support() == 0) {
      if (zero_support) zero_support->push_back(c.classes[i]);
      continue;  // contributes 0
    }
    sum += static_cast<double>(k.tp) / static_cast<double>(k.support());
  }
  return sum / static_cast<double>(c.counts.size());
}

double accuracy(const ConfusionCounts& c) {
  if (c.counts.empty()) throw DataError("accuracy: no classes");
  long correct = 0, total = 0;
  for (const auto& k : c.counts) {
    correct += k.tp + k.tn;
    total += k.total();
  }
  if (total == 0) return 0.0;
  return static_cast<double>(correct) / static_cast<double>(total);
}

ConfusionCounts accumulate(const std::vector<ConfusionCounts>& folds) {
  if (folds.empty()) throw DataError("accumulate: empty fold list");
  ConfusionCounts out = folds.front();
  for (size_t f = 1; f < folds.size(); ++f) {
    if (folds[f].classes != out.classes)
      throw DataError("accumulate: class-set mismatch between folds");
    for (size_t i = 0; i < out.counts.size(); ++i) {
      out.counts[i].tp += folds[f].counts[i].tp;
      out.counts[i].fp += folds[f].counts[i].fp;
      out.counts[i].fn += folds[f].counts[i].fn;
      out.counts[i].tn += folds[f].counts[i].tn;
    }
  }
  return out;
}

double f1_macro_folds(const std::vector<FoldPredictions>& per_fold,
                      const std::vector<std::string>& class_names) {
  if (per_fold.empty()) throw DataError("f1_macro_folds: no folds");
  double sum = 0.0;
  for (const auto& fold : per_fold)
    sum += f1_macro(confusion_multiclass(fold.truth, fold.pred, class_names));
  return sum / static_cast<double>(per_fold.size());
}

double f1_macro_folds_multilabel(
    const std::vector<std::pair<Eigen::MatrixXi, Eigen::MatrixXi>>& per_fold,
    const std::vector<std::string>& class_names) {
  if (per_fold.empty()) throw DataError("f1_macro_folds: no folds");
  double sum = 0.0;
  for (const auto& [truth, pred] : per_fold)
    sum += f1_macro(confusion_multilabel(truth, pred, class_names));
  return sum / static_cast<double>(per_fold.size());
}

const char* to_string(MetricName name) {
  switch (name) {
    case MetricName::f1_binary: return "f1_binary";
    case MetricName::f1_macro: return "f1_macro";
    case MetricName::f1_micro: return "f1_micro";
    case MetricName::f1_weighted: return "f1_weighted";
    case MetricName::f1_macro_folds: return "f1_macro_folds";
    case MetricName::uar: return "uar";
    case MetricName::accuracy: return "accuracy";
  }
  return "unknown";
}

const char* to_string(MetricScope scope) {
  return scope == MetricScope::pooled ? "pooled" : "per-fold-averaged";
}

std::string MetricTable::to_csv() const {
  std::ostringstream os;
  os << "metric,detail,value,scope,biased,warning\n";
  for (const auto& row : rows) {
    os << to_string(row.name) << ',' << row.detail << ','
       << format_fixed(round_digits(row.value * 100.0, 1), 1) << ','
       << to_string(row.scope) << ',' << (row.biased ? "true" : "false") << ','
       << row.warning << '\n';
  }
  return os.str();
}

}  // namespace aubench
