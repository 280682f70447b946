#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "aubench/losses.hpp"
#include "aubench/rng.hpp"

namespace aubench {

enum class ModelKind {
  constant_positive,   // always predicts the positive label
  linear_hinge,        // one-vs-rest linear classifier, hinge loss
  logistic_multilabel, // linear classifier, BCE-with-logits loss
  mlp,                 // feed-forward net with tanh hidden layers, BCE loss
};

const char* to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& s);

struct ModelSpec {
  ModelKind kind = ModelKind::logistic_multilabel;
  int input_dim = 0;
  int output_dim = 0;
  std::vector<int> hidden;  // mlp only
};

class Model {
 public:
  virtual ~Model() = default;

  virtual Eigen::MatrixXd forward(const Eigen::Ref<const Eigen::MatrixXd>& X) const = 0;

  // Loss and full parameter gradient on a batch. Only valid when trainable().
  virtual double loss_and_param_grad(const Eigen::Ref<const Eigen::MatrixXd>& X,
                                     const Eigen::Ref<const Eigen::MatrixXi>& Y,
                                     Eigen::VectorXd& grad_out) = 0;

  virtual bool trainable() const = 0;
  virtual Eigen::VectorXd& params() = 0;
  virtual const Eigen::VectorXd& params() const = 0;

  Eigen::MatrixXi predict(const Eigen::Ref<const Eigen::MatrixXd>& X) const {
    return threshold_predictions(forward(X));
  }
};

// Deterministic construction: identical spec and rng state give identical
// initial parameters.
std::unique_ptr<Model> make_model(const ModelSpec& spec, Rng& init_rng);

}  // namespace aubench
