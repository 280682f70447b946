#pragma once

#include <Eigen/Dense>

namespace aubench {

struct AdamConfig {
  double lr = 1e-4;
  double weight_decay = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  Eigen::VectorXd m;
  Eigen::VectorXd v;
  long step = 0;

  static AdamState zeros(Eigen::Index n);
};

// One Adam update with bias correction. Weight decay is decoupled and applied
// multiplicatively before the moment step: params *= (1 - lr * wd). Throws on
// a non-finite gradient.
void adam_step(Eigen::VectorXd& params, const Eigen::VectorXd& grad,
               AdamState& state, const AdamConfig& cfg);

}  // namespace aubench
