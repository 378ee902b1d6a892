#pragma once

#include <array>
#include <vector>

#include "hrc/arm_models.hpp"
#include "hrc/geometry.hpp"

namespace hrc {

/// Everything a configuration is checked against. Human capsules are already inflated by the
/// safety margin and may hold several predicted poses.
struct Scene {
  RobotGeometry robot;
  std::vector<Box> static_boxes;
  std::vector<Capsule> human_capsules;
};

inline constexpr double kDefaultEdgeStep = 0.05;

/// Exact minimum distance between closed segments [a0,a1] and [b0,b1]. Zero-length segments allowed.
double segment_segment_distance(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1);

/// Exact minimum distance from segment [p0,p1] to a box (0 when they intersect).
double segment_box_distance(const Vec3& p0, const Vec3& p1, const Box& box);

/// Strict: tangent capsules do not collide.
bool capsules_collide(const Capsule& a, const Capsule& b);
bool capsule_box_collide(const Capsule& c, const Box& b);

/// Throws JointLimitViolation for configurations outside the limits.
bool config_in_collision(const JointConfig& q, const Scene& scene);

/// Linear joint-space interpolation sampled on a dyadic grid (2^k segments, spacing <= step in max
/// norm), endpoints included. Halving the step always checks a superset of configurations.
bool edge_in_collision(const JointConfig& a, const JointConfig& b, const Scene& scene,
                       double step = kDefaultEdgeStep);

/// Signed clearances of a configuration: distance minus radii, minimised over environment
/// (boxes, human) and over declared self-collision pairs. Negative means penetration.
struct Clearance {
  double environment = 0.0;
  double self = 0.0;
};
Clearance config_clearance(const JointConfig& q, const Scene& scene);

/// Minimum clearance of the robot to the human capsules only (+inf when there are none).
double human_clearance(const JointConfig& q, const Scene& scene);

/// Conservative continuous check of the whole segment [a,b]: returns true only when every
/// configuration on it is provably collision-free. Uses a Lipschitz bound on link motion and
/// bisects down to min_step (max norm); intervals still unresolved at that size count as colliding.
bool edge_certified_free(const JointConfig& a, const JointConfig& b, const Scene& scene,
                         double min_step = kDefaultEdgeStep / 8.0);

/// Per-joint bound on how far any link axis point moves per radian of that joint.
std::array<double, kDof> link_motion_bounds(const RobotGeometry& robot);

}  // namespace hrc
