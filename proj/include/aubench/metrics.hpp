#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace aubench {

struct ClassCounts {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;

  long total() const { return tp + fp + fn + tn; }
  long support() const { return tp + fn; }
};

// Per-class one-vs-rest confusion counts over a fixed, ordered class list.
struct ConfusionCounts {
  std::vector<std::string> classes;
  std::vector<ClassCounts> counts;
};

// One column per class: counts of a multi-label prediction matrix.
ConfusionCounts confusion_multilabel(const Eigen::MatrixXi& truth,
                                     const Eigen::MatrixXi& pred,
                                     const std::vector<std::string>& class_names);

// Class indices into class_names; every index must be in range.
ConfusionCounts confusion_multiclass(const std::vector<int>& truth,
                                     const std::vector<int>& pred,
                                     const std::vector<std::string>& class_names);

// 2TP / (2TP + FP + FN), defined as 0 on a zero denominator.
double f1_binary(const ClassCounts& c);

// Harmonic-mean route through precision and recall; algebraically identical
// to f1_binary and kept as the independent second route.
double f1_harmonic(const ClassCounts& c);

// Unweighted mean over classes of per-class F1 (averaging over classes, not
// precision/recall-first aggregation).
double f1_macro(const ConfusionCounts& c);

// Pools TP/FP/FN across classes before the F1 formula.
double f1_micro(const ConfusionCounts& c);

// Per-class F1 weighted by class support.
double f1_weighted(const ConfusionCounts& c);

// Unweighted average recall. Classes with zero support contribute 0 and are
// reported through zero_support when given.
double uar(const ConfusionCounts& c,
           std::vector<std::string>* zero_support = nullptr);

// Micro accuracy over all cells.
double accuracy(const ConfusionCounts& c);

// Elementwise sum; fold reduction is associative and commutative. Throws on
// class-set mismatch or an empty list.
ConfusionCounts accumulate(const std::vector<ConfusionCounts>& folds);

// The fold-averaging pitfall: computes macro F1 inside each fold (over the
// full class list) and averages the fold scores. Provided only to quantify
// its bias; every report row carrying it is stamped as biased aggregation.
inline constexpr const char* kFoldAveragingWarning =
    "biased aggregation - do not rank by this";

struct FoldPredictions {
  std::vector<int> truth;
  std::vector<int> pred;
};

double f1_macro_folds(const std::vector<FoldPredictions>& per_fold,
                      const std::vector<std::string>& class_names);

// Multi-label counterpart: per-fold (truth, pred) matrices.
double f1_macro_folds_multilabel(
    const std::vector<std::pair<Eigen::MatrixXi, Eigen::MatrixXi>>& per_fold,
    const std::vector<std::string>& class_names);

// ---------------------------------------------------------------------------
// Report rows

enum class MetricName {
  f1_binary,
  f1_macro,
  f1_micro,
  f1_weighted,
  f1_macro_folds,
  uar,
  accuracy,
};

enum class MetricScope { pooled, per_fold_averaged };

const char* to_string(MetricName name);
const char* to_string(MetricScope scope);

struct MetricValue {
  MetricName name;
  double value = 0.0;  // in [0, 1]
  MetricScope scope = MetricScope::pooled;
  std::string detail;   // e.g. the AU token for per-AU rows, or a fold key
  bool biased = false;
  std::string warning;
};

struct MetricTable {
  std::vector<MetricValue> rows;

  // Values are kept at full precision; tables render on a 0-100 scale with
  // one decimal, ties to even.
  std::string to_csv() const;
};

}  // namespace aubench
