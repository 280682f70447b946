#include "aubench/losses.hpp"

#include <cmath>

#include "aubench/error.hpp"

namespace aubench {

namespace {
void check_shapes(const Eigen::MatrixXd& raw, const Eigen::MatrixXi& labels,
                  const char* who) {
  if (raw.rows() != labels.rows() || raw.cols() != labels.cols())
    throw DataError(std::string(who) + ": shape mismatch");
  if (raw.size() == 0) throw DataError(std::string(who) + ": empty batch");
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    const int y = labels.data()[i];
    if (y != 0 && y != 1)
      throw DataError(std::string(who) + ": labels must be binary");
  }
}
}  // namespace

LossGrad bce_with_logits(const Eigen::MatrixXd& raw, const Eigen::MatrixXi& labels) {
  check_shapes(raw, labels, "bce_with_logits");
  const double inv_n = 1.0 / static_cast<double>(raw.size());
  LossGrad out;
  out.grad.resize(raw.rows(), raw.cols());
  double loss = 0.0;
  for (Eigen::Index c = 0; c < raw.cols(); ++c) {
    for (Eigen::Index r = 0; r < raw.rows(); ++r) {
      const double x = raw(r, c);
      const double y = labels(r, c);
      loss += std::max(x, 0.0) - x * y + std::log1p(std::exp(-std::abs(x)));
      const double sig = 1.0 / (1.0 + std::exp(-x));
      out.grad(r, c) = (sig - y) * inv_n;
    }
  }
  out.loss = loss * inv_n;
  return out;
}

LossGrad hinge_one_vs_rest(const Eigen::MatrixXd& raw, const Eigen::MatrixXi& labels) {
  check_shapes(raw, labels, "hinge_one_vs_rest");
  const double inv_n = 1.0 / static_cast<double>(raw.size());
  LossGrad out;
  out.grad = Eigen::MatrixXd::Zero(raw.rows(), raw.cols());
  double loss = 0.0;
  for (Eigen::Index c = 0; c < raw.cols(); ++c) {
    for (Eigen::Index r = 0; r < raw.rows(); ++r) {
      const double z = labels(r, c) == 1 ? 1.0 : -1.0;
      const double margin = 1.0 - z * raw(r, c);
      if (margin > 0.0) {
        loss += margin;
        out.grad(r, c) = -z * inv_n;
      }
    }
  }
  out.loss = loss * inv_n;
  return out;
}

Eigen::MatrixXi threshold_predictions(const Eigen::MatrixXd& raw) {
  return (raw.array() > 0.0).cast<int>();
}

}  // namespace aubench
