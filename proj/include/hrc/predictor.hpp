#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hrc/arm_models.hpp"
#include "hrc/random.hpp"

namespace hrc {

/// One LSTM layer. W is 4h x (in + h) acting on [x; h_prev], gate blocks ordered i, f, g, o.
struct LstmLayer {
  int input = 0;
  int hidden = 0;
  Eigen::MatrixXd W;
  Eigen::VectorXd b;
};

/// Stacked LSTM plus a linear head emitting one 6-d bone vector per step.
struct PredictorWeights {
  static constexpr const char* kVersion = "hrc-predictor-v1";

  std::string version = kVersion;
  std::vector<LstmLayer> layers;
  Eigen::MatrixXd dense_W;  // 6 x h_last
  Eigen::VectorXd dense_b;

  static PredictorWeights initialize(const std::vector<int>& hidden_sizes, std::uint64_t seed);
  static PredictorWeights zeros(const std::vector<int>& hidden_sizes);

  /// 6, hidden..., 6
  std::vector<int> layer_sizes() const;
  std::size_t parameter_count() const;
  /// Throws ShapeMismatch when dimensions do not chain.
  void validate() const;

  Eigen::VectorXd flatten() const;
  void assign(const Eigen::VectorXd& flat);
};

/// Inverted-dropout masks, one per LSTM layer output, held fixed over the whole sequence.
/// Entries are 0 or 1/(1-p); all-ones is the expectation (deterministic) mask.
struct DropoutMasks {
  std::vector<Eigen::VectorXd> layers;

  static DropoutMasks sample(const PredictorWeights& w, double p, Rng& rng);
  static DropoutMasks identity(const PredictorWeights& w);
};

enum class ForwardMode { Train, MonteCarlo, Deterministic };

/// Encodes the N x 6 observation, then decodes out_steps rows autoregressively: the first output
/// comes from the final encoder state, each later one feeds the previous output back as input.
/// Masks are required unless mode is Deterministic. Throws ShapeMismatch.
Eigen::MatrixXd lstm_forward(const Eigen::MatrixXd& X, const PredictorWeights& w, const DropoutMasks* masks,
                             ForwardMode mode, int out_steps = 50);

struct SequencePair {
  Eigen::MatrixXd X;  // observed, N x 6
  Eigen::MatrixXd Y;  // target, M x 6
};

/// Mean squared error over every output element of the batch, with its analytic gradient (BPTT
/// through encoder, decoder and the output feedback path). masks[i] belongs to batch[i].
double predictor_loss_and_gradient(const PredictorWeights& w, const std::vector<const SequencePair*>& batch,
                                   const std::vector<DropoutMasks>& masks, PredictorWeights* grad);

struct PredictorHyper {
  double lr = 2e-3;
  int batch = 32;
  int epochs = 20;
  std::uint64_t seed = 1;
  double dropout = 0.10;
  double clip_norm = 5.0;
};

struct EpochStats {
  int epoch = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;
};

struct TrainingCurve {
  double initial_val_loss = 0.0;
  std::vector<EpochStats> epochs;
};

/// Deterministic-mode mean squared error over a set of windows.
double predictor_eval_loss(const PredictorWeights& w, const std::vector<SequencePair>& data);

/// Mini-batch Adam on the MSE with dropout active. Returns the weights with the best validation
/// loss. Throws DivergenceError on a non-finite loss.
PredictorWeights train_predictor(const std::vector<SequencePair>& train, const std::vector<SequencePair>& val,
                                 PredictorWeights init, const PredictorHyper& hyper, TrainingCurve* curve = nullptr);

/// K predicted bone sequences with their moments.
struct UncertainPrediction {
  std::vector<Eigen::MatrixXd> samples;  // K of M x 6, bones renormalised
  Eigen::MatrixXd mean;                  // E, M x 6
  Eigen::MatrixXd variance;              // u, M x 6
  double horizon_dt = 0.04;

  int K() const { return static_cast<int>(samples.size()); }
  int steps() const { return static_cast<int>(mean.rows()); }
};

/// K forward passes, each with fresh Bernoulli masks from a stream seeded by `seed`.
std::vector<Eigen::MatrixXd> mc_dropout_sample(const Eigen::MatrixXd& X, const PredictorWeights& w, int K,
                                               double p, std::uint64_t seed, int out_steps = 50);

struct PredictiveMoments {
  Eigen::MatrixXd mean;
  Eigen::MatrixXd variance;
};

/// E = mean of the samples, u = (sum F*F - K E*E) / (K-1) elementwise (evaluated on samples shifted
/// by the first one, which leaves u unchanged). Throws InsufficientSamples when K < 2.
PredictiveMoments predictive_moments(const std::vector<Eigen::MatrixXd>& samples);

/// Renormalises every sampled bone and attaches the moments. Throws DegenerateBone when a sampled
/// bone has norm below 1e-6.
UncertainPrediction make_uncertain_prediction(std::vector<Eigen::MatrixXd> raw_samples, double horizon_dt = 0.04);

/// Convenience: MCDS followed by make_uncertain_prediction.
UncertainPrediction predict_with_uncertainty(const Eigen::MatrixXd& X, const PredictorWeights& w, int K, double p,
                                             std::uint64_t seed);

/// Arm poses per requested horizon (outer) and sample (inner).
std::vector<std::vector<ArmJointPositions>> prediction_to_poses(const UncertainPrediction& pred,
                                                                const AnthropometricParams& params,
                                                                const std::vector<int>& horizons);

/// Positional spread implied by u at one step: elbow = L1 sqrt(sum u_upper),
/// wrist = sqrt(L1^2 sum u_upper + L2^2 sum u_fore).
struct JointSigma {
  double elbow = 0.0;
  double wrist = 0.0;
};
JointSigma joint_sigma(const UncertainPrediction& pred, const AnthropometricParams& params, int step);

}  // namespace hrc
