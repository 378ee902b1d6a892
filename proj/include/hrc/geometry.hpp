#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace hrc {

inline constexpr int kDof = 6;

using Vec3 = Eigen::Vector3d;
using JointConfig = Eigen::Matrix<double, kDof, 1>;

/// Segment swept by a sphere. Robot links and human arm segments are both capsules.
struct Capsule {
  Vec3 p0 = Vec3::Zero();
  Vec3 p1 = Vec3::Zero();
  double radius = 0.0;
};

/// Axis-aligned box, corners in metres.
struct Box {
  Vec3 min_corner = Vec3::Zero();
  Vec3 max_corner = Vec3::Zero();

  Vec3 center() const { return 0.5 * (min_corner + max_corner); }
  double max_half_extent() const { return 0.5 * (max_corner - min_corner).maxCoeff(); }
};

inline double max_norm(const JointConfig& a, const JointConfig& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace hrc
