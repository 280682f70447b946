#pragma once

#include <Eigen/Dense>

namespace aubench {

struct LossGrad {
  double loss = 0.0;
  Eigen::MatrixXd grad;  // d loss / d raw, same shape as the raw outputs
};

// Mean over all n*C entries of -[y log s(x) + (1-y) log(1-s(x))] with
// s(x) = 1/(1+exp(-x)), computed in the overflow-safe form
// max(x,0) - x*y + log1p(exp(-|x|)). Throws on shape mismatch or labels
// outside {0,1}.
LossGrad bce_with_logits(const Eigen::MatrixXd& raw, const Eigen::MatrixXi& labels);

// One-vs-rest hinge: per entry z = 2y-1, loss = mean(max(0, 1 - z*x)).
// Subgradient at the kink is 0.
LossGrad hinge_one_vs_rest(const Eigen::MatrixXd& raw, const Eigen::MatrixXi& labels);

// p = 1 iff the raw output is strictly positive; an output of exactly 0
// predicts 0.
Eigen::MatrixXi threshold_predictions(const Eigen::MatrixXd& raw);

}  // namespace aubench
