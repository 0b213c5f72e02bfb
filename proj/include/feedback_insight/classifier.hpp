#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace feedback_insight {

struct TrainConfig {
  double learning_rate = 0.1;
  std::size_t epochs = 100;
  std::size_t batch_size = 32;
  std::uint64_t seed = 42;
  double l2_penalty = 0.0;
  std::size_t hidden_units = 0;  // 0: single linear layer + softmax
  double init_scale = 0.01;      // weights ~ U(-init_scale, init_scale)

  /// Throws PreconditionError naming the offending field.
  void validate() const;
};

/// tanh layer placed before the output layer when TrainConfig::hidden_units > 0.
struct HiddenLayer {
  Eigen::MatrixXd weights;  // H x D
  Eigen::VectorXd biases;   // H
};

/// Multinomial logistic regression head (optionally one tanh hidden layer) over embeddings.
struct SoftmaxClassifier {
  std::vector<std::string> classes;
  std::size_t dimension = 0;
  Eigen::MatrixXd weights;  // C x D, or C x H with a hidden layer
  Eigen::VectorXd biases;   // C
  std::optional<HiddenLayer> hidden;

  std::size_t num_classes() const noexcept { return classes.size(); }
  /// Throws DimensionMismatch.
  Eigen::VectorXd logits(std::span<const double> x) const;
  Eigen::VectorXd probabilities(std::span<const double> x) const;
};

/// Zero weights and biases; predicts the uniform distribution.
SoftmaxClassifier make_zero_classifier(std::vector<std::string> classes, std::size_t dimension);

/// Numerically stable softmax (log-sum-exp shift).
Eigen::VectorXd softmax(const Eigen::VectorXd& logits);

struct TrainingPair {
  std::vector<double> x;
  std::string label;
};

struct TrainResult {
  SoftmaxClassifier model;
  std::vector<double> loss_trace;  // mean cross-entropy (+ L2 term) per epoch
};

/// Mini-batch gradient descent on cross-entropy; batches reshuffled every epoch
/// from the seeded stream. Throws UnknownClass, DimensionMismatch, NonFiniteLoss,
/// PreconditionError.
TrainResult train(std::span<const TrainingPair> pairs, const std::vector<std::string>& classes,
                  const TrainConfig& cfg);

struct TopKPrediction {
  std::vector<std::pair<std::string, double>> entries;  // descending probability
};

/// k larger than the class count returns every class. Ties break by class id.
TopKPrediction predict_topk(const SoftmaxClassifier& model, std::span<const double> x, std::size_t k);

struct EvalItem {
  std::vector<double> x;
  std::set<std::string> labels;
};

/// Fraction of items whose label set intersects the top-k predicted classes.
/// Throws EmptyLabelSet.
double evaluate_topk(const SoftmaxClassifier& model, std::span<const EvalItem> items, std::size_t k);

/// Mean cross-entropy over `batch` plus 0.5 * l2_penalty * ||weights||^2.
double batch_loss(const SoftmaxClassifier& model, std::span<const TrainingPair> batch, double l2_penalty = 0.0);

struct GradientCheckReport {
  double max_relative_error = 0.0;
  double max_absolute_error = 0.0;
  std::size_t parameters_checked = 0;
};

/// Compares the analytic gradient of batch_loss against central differences,
/// parameter by parameter. epsilon must lie in (0, 1e-2].
GradientCheckReport gradient_check(const SoftmaxClassifier& model, std::span<const TrainingPair> batch,
                                   double epsilon, double l2_penalty = 0.0);

nlohmann::json to_json(const SoftmaxClassifier& model);
/// Throws ParseError on a malformed artifact.
SoftmaxClassifier classifier_from_json(const nlohmann::json& j);
void save_model(const SoftmaxClassifier& model, const std::filesystem::path& path);
SoftmaxClassifier load_model(const std::filesystem::path& path);

}  // namespace feedback_insight
