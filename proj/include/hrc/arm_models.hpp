#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hrc/geometry.hpp"

namespace hrc {

/// Standard Denavit-Hartenberg row: Rz(q + theta_offset) Tz(d) Tx(a) Rx(alpha).
struct DhRow {
  double a = 0.0;
  double alpha = 0.0;
  double d = 0.0;
  double theta_offset = 0.0;
};

struct JointLimit {
  double lo = -EIGEN_PI;
  double hi = EIGEN_PI;
};

struct RobotGeometry {
  std::array<DhRow, kDof> dh{};
  std::array<JointLimit, kDof> limits{};
  std::array<double, kDof> link_radii{};
  Eigen::Isometry3d base_frame = Eigen::Isometry3d::Identity();
  /// Link index pairs checked for self-collision.
  std::vector<std::pair<int, int>> self_collision_pairs;

  /// Tabletop collaborative arm, reach about 0.9 m.
  static RobotGeometry default_cobot();

  /// Throws ConfigError when radii or limits are invalid.
  void validate() const;
  bool within_limits(const JointConfig& q) const;
  JointConfig clamp_to_limits(const JointConfig& q) const;
  JointConfig lower_limits() const;
  JointConfig upper_limits() const;
  /// |o_k - o_{k-1}| for each DH row.
  std::array<double, kDof> link_lengths() const;
};

using FramePositions = std::array<Vec3, kDof + 1>;

/// Joint-frame origins o_0 (base) ... o_6 (end-effector).
/// Throws JointLimitViolation if q leaves the joint limits.
FramePositions forward_kinematics(const JointConfig& q, const RobotGeometry& robot);

/// Same chain without the limit check; for interpolated configurations the caller already bounded.
FramePositions forward_kinematics_unchecked(const JointConfig& q, const RobotGeometry& robot);

inline Vec3 end_effector(const JointConfig& q, const RobotGeometry& robot) {
  return forward_kinematics_unchecked(q, robot)[kDof];
}

/// Capsule i spans origin i to origin i+1 with radius link_radii[i].
std::array<Capsule, kDof> robot_link_capsules(const JointConfig& q, const RobotGeometry& robot);
std::array<Capsule, kDof> link_capsules_from_frames(const FramePositions& frames,
                                                    const RobotGeometry& robot);

// Human arm

/// Unit bone directions; together the 6-vector x = (phi1, phi2).
struct ArmBonePose {
  Vec3 upper_arm = Vec3::UnitZ();  // shoulder -> elbow
  Vec3 forearm = Vec3::UnitZ();    // elbow -> wrist

  Eigen::Matrix<double, 6, 1> as_vector() const;
  static ArmBonePose from_vector(const Eigen::Ref<const Eigen::VectorXd>& x);
};

struct AnthropometricParams {
  double upper_arm_length = 0.30;
  double forearm_length = 0.25;
  double upper_arm_radius = 0.05;
  double forearm_radius = 0.045;
  Vec3 shoulder_anchor = Vec3::Zero();

  void validate() const;
  double reach() const { return upper_arm_length + forearm_length; }
};

struct ArmJointPositions {
  Vec3 shoulder = Vec3::Zero();
  Vec3 elbow = Vec3::Zero();
  Vec3 wrist = Vec3::Zero();
};

/// Throws NonUnitBone when a bone deviates from unit length by more than 1e-6.
ArmJointPositions reconstruct_arm(const ArmBonePose& pose, const AnthropometricParams& params);

/// Throws DegenerateBone when a segment is shorter than 1e-9 m.
ArmBonePose normalize_bone_vectors(const ArmJointPositions& joints);

/// Upper-arm and forearm capsules inflated by safety_margin.
std::array<Capsule, 2> arm_capsules(const ArmJointPositions& joints,
                                    const AnthropometricParams& params, double safety_margin);

}  // namespace hrc
