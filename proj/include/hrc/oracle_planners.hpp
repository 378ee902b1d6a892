#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hrc/collision.hpp"
#include "hrc/workspace_graph.hpp"

namespace hrc {

struct Path {
  std::vector<JointConfig> configs;
  std::vector<double> timestamps;

  std::size_t size() const { return configs.size(); }
  bool empty() const { return configs.empty(); }
  /// Sets timestamps to i * dt.
  void retime(double dt = kPathDt);
  /// Sum of joint-space (Euclidean) edge lengths.
  double cspace_length() const;

  static constexpr double kPathDt = 0.1;
};

struct PlanRequest {
  JointConfig start = JointConfig::Zero();
  JointConfig goal = JointConfig::Zero();
  Scene scene;
  double step_size = 0.1;        // rad, Euclidean steer distance
  double goal_tolerance = 0.05;  // rad, max norm
  double goal_bias = 0.05;
  int iteration_budget = 5000;
  std::uint64_t seed = 1;
  /// RRT* stops once its cost is at most stop_ratio * reference_cost.
  std::optional<double> stop_ratio;
  double reference_cost = 0.0;
  double max_near_radius = 1.0;  // rad, cap on the shrinking RRT* radius
  /// Once RRT* has a solution, draw samples from the ellipsoid that can still improve it.
  bool informed = true;

  /// Throws DomainError on non-positive budget/step or colliding endpoints.
  void validate() const;
};

enum class PlanOutcome { Success, Timeout, Stuck, Invalid };
std::string to_string(PlanOutcome outcome);

struct PlanStats {
  bool success = false;
  PlanOutcome outcome = PlanOutcome::Timeout;
  double ee_path_length = 0.0;  // m
  double cspace_length = 0.0;   // rad
  double wall_time = 0.0;       // s
  std::size_t tree_size = 0;
  int iterations = 0;
};

struct PlanResult {
  Path path;
  PlanStats stats;
};

/// Goal-biased RRT; returns the first path that reaches the goal tolerance.
PlanResult rrt_plan(const PlanRequest& req);

/// RRT* with radius min(gamma (log n / n)^(1/6), max_near_radius), rewiring on joint-space length.
/// With `informed`, samples after the first solution come from the prolate hyperspheroid
/// {q : |q - start| + |q - goal| <= best cost}.
/// Runs to the budget unless the stop ratio is met; the best cost never increases with budget.
PlanResult rrt_star_plan(const PlanRequest& req);

/// RRT* near-neighbour constant for a box-shaped 6-d configuration space of the given volume.
double rrt_star_gamma(double cspace_volume);

/// End-effector distance travelled, each edge sub-sampled at the edge-check step.
double ee_path_length(const Path& path, const RobotGeometry& robot, double step = kDefaultEdgeStep);

/// Random pair shortcutting; a shortcut is kept only when its edge is certified free and it
/// strictly reduces the end-effector length.
Path shortcut_path(const Path& path, const Scene& scene, int attempts, std::uint64_t seed);

/// Splits every edge into equal pieces of at most max_step (max norm); vertices are kept.
Path resample_path(const Path& path, double max_step = 0.1);

/// Joint configuration drawn uniformly within limits until collision-free.
std::optional<JointConfig> sample_free_config(const Scene& scene, Rng& rng, int max_tries = 1000);

/// One imitation pair: at config c with the given goal (and human forecast), go to c_next.
struct ExpertSample {
  int scene_id = 0;
  int path_id = 0;
  JointConfig c = JointConfig::Zero();
  JointConfig c_next = JointConfig::Zero();
  JointConfig goal = JointConfig::Zero();
  std::optional<HumanForecast> forecast;
};

struct ExpertOptions {
  int scenarios_per_workspace = 200;
  int rrt_star_budget = 2000;
  int shortcut_attempts = 200;
  double label_step = 0.1;
  double min_separation = 1.0;  // rad, max norm between start and goal
  bool include_reverse = true;  // also emit the reversed path (goal-branch training)
  double human_margin = 0.05;
  PlanRequest planner;          // template for step, tolerance, bias and radius
};

/// Supplies the human forecast for (workspace, scenario); its capsules join the scene.
using HumanProvider = std::function<HumanForecast(int workspace, int scenario, std::uint64_t seed)>;

struct ExpertLog {
  int planned = 0;
  int skipped = 0;
  std::vector<std::string> messages;
};

/// For every scenario: sample a free start/goal, plan with RRT*, shortcut, resample and emit one
/// sample per consecutive pair. Scenarios whose plan times out are skipped and logged.
std::vector<ExpertSample> generate_expert_dataset(const std::vector<Scene>& workspaces,
                                                  const ExpertOptions& options, std::uint64_t seed,
                                                  const HumanProvider& human = {},
                                                  const AnthropometricParams& params = {},
                                                  ExpertLog* log = nullptr, int scene_id_offset = 0);

}  // namespace hrc
