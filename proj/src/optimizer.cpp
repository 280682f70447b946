#include "aubench/optimizer.hpp"

#include <cmath>

#include "aubench/error.hpp"

namespace aubench {

AdamState AdamState::zeros(Eigen::Index n) {
  AdamState s;
  s.m = Eigen::VectorXd::Zero(n);
  s.v = Eigen::VectorXd::Zero(n);
  return s;
}

void adam_step(Eigen::VectorXd& params, const Eigen::VectorXd& grad,
               AdamState& state, const AdamConfig& cfg) {
  if (params.size() != grad.size() || params.size() != state.m.size())
    throw DataError("adam_step: size mismatch");
  if (!grad.allFinite()) throw DataError("adam_step: non-finite gradient");

  if (cfg.weight_decay != 0.0) params *= 1.0 - cfg.lr * cfg.weight_decay;

  state.step += 1;
  state.m = cfg.beta1 * state.m + (1.0 - cfg.beta1) * grad;
  state.v = cfg.beta2 * state.v.array().matrix() +
            (1.0 - cfg.beta2) * grad.array().square().matrix();
  const double m_corr = 1.0 - std::pow(cfg.beta1, static_cast<double>(state.step));
  const double v_corr = 1.0 - std::pow(cfg.beta2, static_cast<double>(state.step));
  params.array() -= cfg.lr * (state.m.array() / m_corr) /
                    ((state.v.array() / v_corr).sqrt() + cfg.eps);
}

}  // namespace aubench
