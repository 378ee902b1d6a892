#pragma once

#include <memory>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "hrc/arm_models.hpp"
#include "hrc/collision.hpp"
#include "hrc/predictor.hpp"

namespace hrc {

/// Node groups, counts and feature scaling of the planning graph.
///
/// Node order: current joints [0, 6), goal joints [6, 12), obstacle slots, then human nodes indexed
/// by (sample k, horizon h, arm joint j) with j = 0 elbow, 1 wrist.
struct GraphSchema {
  int obstacle_slots = 3;
  int samples = 5;
  std::vector<double> horizons_s{0.0, 0.67, 1.33, 2.0};
  double position_scale = 1.0;  // m
  double sigma_scale = 0.1;     // m
  double prediction_dt = 0.04;  // s between predicted rows

  static constexpr int kRobotNodes = kDof;
  static constexpr int kArmJoints = 2;
  static constexpr int kFeatures = 6;

  static constexpr double kObstacleCode = -1.25;
  static constexpr double kElbowCode = 1.25;
  static constexpr double kWristCode = 1.5;
  static double current_code(int joint) { return (joint + 1) / 6.0; }
  static double goal_code(int joint) { return -(joint + 1) / 6.0; }

  int horizons() const { return static_cast<int>(horizons_s.size()); }
  int human_nodes() const { return samples * horizons() * kArmJoints; }
  int node_count() const { return 2 * kRobotNodes + obstacle_slots + human_nodes(); }
  int current_node(int joint) const { return joint; }
  int goal_node(int joint) const { return kRobotNodes + joint; }
  int obstacle_node(int slot) const { return 2 * kRobotNodes + slot; }
  int human_node(int k, int h, int j) const {
    return 2 * kRobotNodes + obstacle_slots + (k * horizons() + h) * kArmJoints + j;
  }
  /// Row of the predicted sequence matching horizon h, or -1 for the present pose (t = 0).
  int prediction_row(int h) const;

  /// Throws SchemaMismatch on non-positive counts or unordered horizons.
  void validate() const;
};

/// Predicted arm joints per sample and horizon, with the positional spread per horizon.
struct HumanForecast {
  std::vector<std::vector<ArmJointPositions>> positions;  // [k][h]
  std::vector<std::array<double, 2>> sigma;               // [h] {elbow, wrist}

  /// Throws SchemaMismatch when the dimensions disagree with the schema.
  void check(const GraphSchema& schema) const;
};

/// The present pose repeated at every horizon with zero spread.
HumanForecast forecast_current_only(const ArmJointPositions& current, const GraphSchema& schema);

/// Samples at the schema horizons; horizon 0 is the present pose.
HumanForecast forecast_from_prediction(const UncertainPrediction& pred, const ArmJointPositions& current,
                                       const AnthropometricParams& params, const GraphSchema& schema);

/// Capsules of every distinct pose in the forecast, inflated by margin.
std::vector<Capsule> forecast_capsules(const HumanForecast& forecast, const AnthropometricParams& params,
                                       double margin);

struct WorkspaceGraph {
  Eigen::MatrixXd H;  // T x 6
  Eigen::MatrixXd A;  // T x T, symmetric 0/1, zero diagonal
};

/// Throws SchemaMismatch when the scene has more boxes than obstacle slots or the forecast does
/// not match the schema. Throws JointLimitViolation for out-of-limit configurations.
WorkspaceGraph build_graph(const JointConfig& config, const JointConfig& goal, const Scene& scene,
                           const HumanForecast* forecast, const GraphSchema& schema);

/// D^-1/2 (A + I) D^-1/2 with D the degree matrix of A + I.
Eigen::MatrixXd normalized_adjacency(const Eigen::MatrixXd& A);
Eigen::SparseMatrix<double> normalized_adjacency_sparse(const Eigen::MatrixXd& A);

/// Feature rows only; the adjacency depends just on which obstacle slots and humans are present.
Eigen::MatrixXd graph_features(const JointConfig& config, const JointConfig& goal, const Scene& scene,
                               const HumanForecast* forecast, const GraphSchema& schema);
Eigen::MatrixXd graph_adjacency(int boxes_present, bool human_present, const GraphSchema& schema);

}  // namespace hrc
