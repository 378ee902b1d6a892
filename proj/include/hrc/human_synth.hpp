#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hrc/arm_models.hpp"

namespace hrc {

struct Waypoint {
  Vec3 wrist_target = Vec3::Zero();
  double dwell = 0.0;  // seconds spent at the target before moving on
};

struct MotionScript {
  std::string label;  // "A" or "B"
  std::vector<Waypoint> waypoints;

  void validate() const;
};

struct ArmTrajectory {
  double rate = 25.0;
  std::vector<ArmJointPositions> frames;
  std::vector<ArmBonePose> bone_frames;

  std::size_t size() const { return frames.size(); }
  double dt() const { return 1.0 / rate; }
};

struct SynthNoise {
  double waypoint_sigma = 0.02;                       // m
  std::pair<double, double> speed_scale_range{0.8, 1.2};
};

struct SynthOptions {
  double rate = 25.0;
  double swivel_deg = 30.0;         // elbow swivel about the shoulder-wrist axis, from the vertical plane
  double swivel_jitter_deg = 3.0;   // per-trajectory Gaussian jitter
  double move_base_s = 0.3;         // reach duration = (base + per_metre * distance) / speed_scale
  double move_per_metre_s = 8.5;
};

/// Minimum-jerk position profile 10t^3 - 15t^4 + 6t^5. Throws DomainError outside [0, 1].
double min_jerk_profile(double tau);

/// Wrist follows min-jerk segments between jittered waypoints; the elbow comes from a two-link
/// inverse model with a fixed swivel angle. Throws UnreachableWaypoint when a target is out of reach.
ArmTrajectory synth_trajectory(const MotionScript& script, const AnthropometricParams& params,
                               const SynthNoise& noise, std::uint64_t seed,
                               const SynthOptions& options = {});

/// Elbow position for a wrist target given the swivel angle (radians).
Vec3 solve_elbow(const Vec3& shoulder, const Vec3& wrist, const AnthropometricParams& params,
                 double swivel_rad);

inline constexpr int kObservedSteps = 50;
inline constexpr int kPredictedSteps = 50;
inline constexpr int kBoneDims = 6;

enum class Split { Train, Val, Test };
std::string to_string(Split split);

struct TrajectoryRecord {
  int id = 0;
  std::string label;
  Split split = Split::Train;
  ArmTrajectory trajectory;
};

/// A window is a view into a trajectory: X = frames [t0, t0+50), Y = [t0+50, t0+100).
struct WindowRef {
  int traj_id = 0;
  int t0 = 0;
};

struct HumanDataset {
  std::vector<TrajectoryRecord> trajectories;
  std::vector<WindowRef> train, val, test;

  /// Bone-vector rows of a window, each 50 x 6.
  Eigen::MatrixXd observed(const WindowRef& w) const;
  Eigen::MatrixXd future(const WindowRef& w) const;
  /// Rebuilds the stride-1 window lists from the trajectories and their split labels.
  void index_windows();
  const TrajectoryRecord& trajectory(int id) const { return trajectories.at(static_cast<std::size_t>(id)); }
};

Eigen::MatrixXd bone_matrix(const ArmTrajectory& traj, int first, int count);

struct DatasetSpec {
  int count_per_script = 120;
  double train_fraction = 0.70;
  double val_fraction = 0.15;
  double test_fraction = 0.15;
  SynthNoise noise;
  SynthOptions synth;
};

/// Trajectories (not windows) are partitioned between splits. Throws InsufficientLength when a
/// trajectory has fewer than 100 frames, DomainError when the split does not sum to one.
HumanDataset build_dataset(const std::vector<MotionScript>& scripts, const AnthropometricParams& params,
                           const DatasetSpec& spec, std::uint64_t seed);

}  // namespace hrc
