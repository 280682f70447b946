#include "aubench/models.hpp"

#include <cmath>

#include "aubench/error.hpp"

namespace aubench {

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::constant_positive: return "constant-positive";
    case ModelKind::linear_hinge: return "linear-hinge";
    case ModelKind::logistic_multilabel: return "logistic-multilabel";
    case ModelKind::mlp: return "mlp";
  }
  return "unknown";
}

ModelKind model_kind_from_string(const std::string& s) {
  if (s == "constant-positive" || s == "constant") return ModelKind::constant_positive;
  if (s == "linear-hinge") return ModelKind::linear_hinge;
  if (s == "logistic-multilabel" || s == "logistic") return ModelKind::logistic_multilabel;
  if (s == "mlp") return ModelKind::mlp;
  throw ConfigError("unknown model kind '" + s + "'");
}

namespace {

class ConstantPositive final : public Model {
 public:
  explicit ConstantPositive(int output_dim) : output_dim_(output_dim) {}

  Eigen::MatrixXd forward(const Eigen::Ref<const Eigen::MatrixXd>& X) const override {
    return Eigen::MatrixXd::Ones(X.rows(), output_dim_);
  }

  double loss_and_param_grad(const Eigen::Ref<const Eigen::MatrixXd>&,
                             const Eigen::Ref<const Eigen::MatrixXi>&,
                             Eigen::VectorXd&) override {
    throw DataError("constant-positive model has no parameters to train");
  }

  bool trainable() const override { return false; }
  Eigen::VectorXd& params() override { return params_; }
  const Eigen::VectorXd& params() const override { return params_; }

 private:
  int output_dim_;
  Eigen::VectorXd params_;
};

enum class LossKind { bce, hinge };

// Fully connected net over a flat parameter vector; zero hidden layers give
// the plain linear classifiers. Hidden activation is tanh (smooth, so the
// analytic gradient is checkable against central differences everywhere).
class FeedForward final : public Model {
 public:
  FeedForward(std::vector<int> layer_sizes, LossKind loss, Rng& rng)
      : sizes_(std::move(layer_sizes)), loss_(loss) {
    if (sizes_.size() < 2) throw DataError("model needs input and output dims");
    for (const int s : sizes_)
      if (s <= 0) throw DataError("model layer sizes must be positive");
    Eigen::Index total = 0;
    for (size_t l = 1; l < sizes_.size(); ++l)
      total += static_cast<Eigen::Index>(sizes_[l]) * sizes_[l - 1] + sizes_[l];
    theta_ = Eigen::VectorXd::Zero(total);
    // Uniform Glorot weights, zero biases.
    Eigen::Index at = 0;
    for (size_t l = 1; l < sizes_.size(); ++l) {
      const int fan_in = sizes_[l - 1], fan_out = sizes_[l];
      const double scale = std::sqrt(6.0 / (fan_in + fan_out));
      const Eigen::Index n_weights = static_cast<Eigen::Index>(fan_out) * fan_in;
      for (Eigen::Index i = 0; i < n_weights; ++i)
        theta_(at + i) = rng.uniform(-scale, scale);
      at += n_weights + fan_out;
    }
  }

  Eigen::MatrixXd forward(const Eigen::Ref<const Eigen::MatrixXd>& X) const override {
    if (X.cols() != sizes_.front())
      throw DataError("model forward: input dimension mismatch");
    Eigen::MatrixXd a = X;
    Eigen::Index at = 0;
    for (size_t l = 1; l < sizes_.size(); ++l) {
      const auto [W, b] = layer(at, l);
      Eigen::MatrixXd z = (a * W.transpose()).rowwise() + b.transpose();
      a = l + 1 < sizes_.size() ? z.array().tanh().matrix() : z;
    }
    return a;
  }

  double loss_and_param_grad(const Eigen::Ref<const Eigen::MatrixXd>& X,
                             const Eigen::Ref<const Eigen::MatrixXi>& Y,
                             Eigen::VectorXd& grad_out) override {
    const size_t n_layers = sizes_.size() - 1;
    std::vector<Eigen::MatrixXd> activations;  // a_0 .. a_L
    activations.reserve(n_layers + 1);
    activations.push_back(X);
    {
      Eigen::Index at = 0;
      for (size_t l = 1; l <= n_layers; ++l) {
        const auto [W, b] = layer(at, l);
        Eigen::MatrixXd z =
            (activations.back() * W.transpose()).rowwise() + b.transpose();
        activations.push_back(l < n_layers ? z.array().tanh().matrix() : z);
      }
    }

    const LossGrad lg = loss_ == LossKind::bce
                            ? bce_with_logits(activations.back(), Y)
                            : hinge_one_vs_rest(activations.back(), Y);

    grad_out = Eigen::VectorXd::Zero(theta_.size());
    Eigen::MatrixXd delta = lg.grad;  // dL/dz at the output layer
    for (size_t l = n_layers; l >= 1; --l) {
      const Eigen::Index at = layer_offset(l);
      const auto [W, b] = layer(at, l);
      const Eigen::MatrixXd& a_prev = activations[l - 1];
      Eigen::Map<Eigen::MatrixXd> dW(grad_out.data() + at, W.rows(), W.cols());
      Eigen::Map<Eigen::VectorXd> db(grad_out.data() + at + W.size(), b.size());
      dW = delta.transpose() * a_prev;
      db = delta.colwise().sum();
      if (l > 1) {
        // tanh'(z) = 1 - a^2
        delta = (delta * W).cwiseProduct(
            (1.0 - activations[l - 1].array().square()).matrix());
      }
    }
    return lg.loss;
  }

  bool trainable() const override { return true; }
  Eigen::VectorXd& params() override { return theta_; }
  const Eigen::VectorXd& params() const override { return theta_; }

 private:
  Eigen::Index layer_offset(size_t l) const {
    Eigen::Index at = 0;
    for (size_t k = 1; k < l; ++k)
      at += static_cast<Eigen::Index>(sizes_[k]) * sizes_[k - 1] + sizes_[k];
    return at;
  }

  // Maps layer l's weights (fan_out x fan_in) and bias out of flat storage.
  std::pair<Eigen::Map<const Eigen::MatrixXd>, Eigen::Map<const Eigen::VectorXd>>
  layer(Eigen::Index at, size_t l) const {
    const int fan_in = sizes_[l - 1], fan_out = sizes_[l];
    Eigen::Map<const Eigen::MatrixXd> W(theta_.data() + at, fan_out, fan_in);
    Eigen::Map<const Eigen::VectorXd> b(
        theta_.data() + at + static_cast<Eigen::Index>(fan_out) * fan_in, fan_out);
    return {W, b};
  }

  std::vector<int> sizes_;
  LossKind loss_;
  Eigen::VectorXd theta_;
};

}  // namespace

std::unique_ptr<Model> make_model(const ModelSpec& spec, Rng& init_rng) {
  if (spec.output_dim < 1) throw DataError("model spec: output_dim must be >= 1");
  if (!spec.hidden.empty() && spec.kind != ModelKind::mlp)
    throw DataError("model spec: hidden layers are only valid for mlp");
  switch (spec.kind) {
    case ModelKind::constant_positive:
      return std::make_unique<ConstantPositive>(spec.output_dim);
    case ModelKind::linear_hinge:
      return std::make_unique<FeedForward>(
          std::vector<int>{spec.input_dim, spec.output_dim}, LossKind::hinge,
          init_rng);
    case ModelKind::logistic_multilabel:
      return std::make_unique<FeedForward>(
          std::vector<int>{spec.input_dim, spec.output_dim}, LossKind::bce,
          init_rng);
    case ModelKind::mlp: {
      std::vector<int> sizes{spec.input_dim};
      sizes.insert(sizes.end(), spec.hidden.begin(), spec.hidden.end());
      sizes.push_back(spec.output_dim);
      return std::make_unique<FeedForward>(std::move(sizes), LossKind::bce,
                                           init_rng);
    }
  }
  throw DataError("unknown model kind");
}

}  // namespace aubench
