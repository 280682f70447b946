#include "aubench/label_matrix.hpp"

#include "aubench/error.hpp"

namespace aubench {

EncodeResult encode_labels(const std::vector<Sample>& samples,
                           const AuVocabulary& vocab) {
  if (vocab.size() == 0) throw DataError("encode_labels: empty vocabulary");
  EncodeResult result;
  result.matrix.vocab = vocab;
  result.matrix.values = Eigen::MatrixXi::Zero(
      static_cast<Eigen::Index>(samples.size()),
      static_cast<Eigen::Index>(vocab.size()));
  for (size_t i = 0; i < samples.size(); ++i) {
    bool dropped = false;
    for (const auto& au : samples[i].au_set) {
      const int c = vocab.index_of(au);
      if (c >= 0) {
        result.matrix.values(static_cast<Eigen::Index>(i), c) = 1;
      } else {
        ++result.coverage.dropped_instances;
        ++result.coverage.dropped_by_au[au.token()];
        dropped = true;
      }
    }
    if (dropped) ++result.coverage.samples_with_drops;
  }
  return result;
}

Eigen::VectorXi column_sums(const LabelMatrix& m) {
  return m.values.colwise().sum();
}

}  // namespace aubench
