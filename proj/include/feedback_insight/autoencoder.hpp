#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

namespace feedback_insight {

enum class Activation { tanh, linear };

struct AutoencoderConfig {
  std::size_t latent = 32;
  std::size_t hidden = 256;
  double kl_weight = 1.0;
  double learning_rate = 1e-3;  // Adam
  std::size_t epochs = 50;
  std::size_t batch_size = 64;
  std::uint64_t seed = 42;
  Activation activation = Activation::tanh;
  /// false: plain autoencoder with a deterministic bottleneck (z = mu, no KL term).
  bool variational = true;

  void validate() const;
};

/// input -> hidden -> (mu, log sigma^2) -> z -> hidden -> reconstruction.
/// Training objective per example: sum of squared reconstruction errors
/// + kl_weight * KL(N(mu, sigma^2) || N(0, I)), averaged over the batch.
struct AutoencoderModel {
  AutoencoderConfig config;
  std::size_t input_dim = 0;
  Eigen::MatrixXd enc_w;     // H x n
  Eigen::VectorXd enc_b;     // H
  Eigen::MatrixXd mu_w;      // L x H
  Eigen::VectorXd mu_b;      // L
  Eigen::MatrixXd logvar_w;  // L x H
  Eigen::VectorXd logvar_b;  // L
  Eigen::MatrixXd dec_w;     // H x L
  Eigen::VectorXd dec_b;     // H
  Eigen::MatrixXd out_w;     // n x H
  Eigen::VectorXd out_b;     // n
  double final_loss = 0.0;
};

/// Xavier-uniform initialized model.
AutoencoderModel init_autoencoder(std::size_t input_dim, const AutoencoderConfig& cfg);

struct AutoencoderTraining {
  AutoencoderModel model;
  std::vector<double> loss_trace;  // one entry per epoch
};

/// Adam over shuffled mini-batches; reparameterization noise comes from the
/// seeded stream. Throws PreconditionError, DimensionMismatch, NonFiniteLoss.
AutoencoderTraining train_autoencoder(std::span<const std::vector<double>> vectors, const AutoencoderConfig& cfg);

/// Posterior mean mu(x). Throws DimensionMismatch.
std::vector<double> encode(const AutoencoderModel& model, std::span<const double> x);
/// Decoder applied to mu(x).
std::vector<double> reconstruct(const AutoencoderModel& model, std::span<const double> x);
/// Mean over all elements of (reconstruct(x) - x)^2.
double reconstruction_mse(const AutoencoderModel& model, std::span<const std::vector<double>> vectors);

/// Closed-form KL(N(mu, exp(logvar)) || N(0, I)).
double gaussian_kl(std::span<const double> mu, std::span<const double> logvar);

/// Training objective on a batch (columns of `x`) with fixed reparameterization
/// noise (L x B; ignored for non-variational models).
double autoencoder_loss(const AutoencoderModel& model, const Eigen::MatrixXd& x, const Eigen::MatrixXd& noise);

struct AutoencoderGradientCheck {
  double max_relative_error = 0.0;
  double max_absolute_error = 0.0;
  std::size_t parameters_checked = 0;
};

/// Analytic gradient of autoencoder_loss against central differences over every parameter.
AutoencoderGradientCheck autoencoder_gradient_check(const AutoencoderModel& model, const Eigen::MatrixXd& x,
                                                    const Eigen::MatrixXd& noise, double epsilon);

}  // namespace feedback_insight
