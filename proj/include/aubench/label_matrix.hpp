#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "aubench/dataset.hpp"
#include "aubench/vocabulary.hpp"

namespace aubench {

// n x C multi-hot AU presence matrix; entry (i, c) is 1 iff vocabulary[c] is
// in sample i's AU set.
struct LabelMatrix {
  Eigen::MatrixXi values;
  AuVocabulary vocab;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

// AUs outside the vocabulary are dropped silently from the matrix but
// tallied here.
struct CoverageReport {
  long dropped_instances = 0;
  long samples_with_drops = 0;
  std::map<std::string, long> dropped_by_au;
};

struct EncodeResult {
  LabelMatrix matrix;
  CoverageReport coverage;
};

EncodeResult encode_labels(const std::vector<Sample>& samples,
                           const AuVocabulary& vocab);

Eigen::VectorXi column_sums(const LabelMatrix& m);

}  // namespace aubench
