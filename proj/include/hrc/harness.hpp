#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrc/gnn_planner.hpp"
#include "hrc/human_synth.hpp"
#include "hrc/oracle_planners.hpp"
#include "hrc/predictor.hpp"
#include "hrc/scene_io.hpp"

namespace hrc {

struct HumanDataConfig {
  DatasetSpec spec;
};

struct PredictorConfig {
  std::vector<int> hidden{64, 64, 64};
  PredictorHyper hyper;
  int train_windows = 2000;  // subsampled from the train split
  int val_windows = 400;
  int K = 5;
};

struct ExpertConfig {
  ExpertOptions options;
  int dynamic_scenarios = 200;
};

struct PlannerConfig {
  int hidden = 64;
  int layers = 5;
  PlannerHyper hyper;
  double val_fraction = 0.1;
};

struct BenchmarkConfig {
  int scenarios_per_workspace = 200;
  std::vector<std::string> planners{"rrt", "rrt_star", "gnn"};
  int rrt_budget = 20000;
  int rrt_star_budget = 5000;
  std::optional<double> stop_ratio = 1.1;
  double min_separation = 1.0;
  BidirectionalOptions gnn;
  double failure_threshold = 0.5;  // any planner failing more often than this sets exit code 4
};

struct SimulationConfig {
  int runs = 50;
  std::vector<std::string> modes{"none", "current_only", "with_prediction"};
  double exec_step = 0.03;  // rad per tick, max norm
  int max_ticks = 250;
  int evasion_samples = 32;
  BidirectionalOptions gnn;
};

struct UncertaintyConfig {
  std::vector<int> K{5, 10, 20};
  int windows = 60;
  int correlation_windows = 200;
};

/// Everything the CLI needs; relative paths are resolved against the config file's directory.
struct HarnessConfig {
  std::string version = "hrc-config-v1";
  std::uint64_t seed = 7;
  std::string output_dir = "out";
  std::vector<std::string> workspace_files;
  std::string cell_file;
  HumanDataConfig human;
  PredictorConfig predictor;
  ExpertConfig expert;
  PlannerConfig planner;
  BenchmarkConfig benchmark;
  SimulationConfig simulation;
  UncertaintyConfig uncertainty;

  std::string output(const std::string& name) const;
};

/// Throws ConfigError on unreadable or inconsistent configuration.
HarnessConfig load_config(const std::string& path);
HarnessConfig parse_config(const std::string& json_text, const std::string& base_dir);

// Output files inside output_dir.
inline constexpr const char* kHumanDatasetFile = "human_dataset.jsonl";
inline constexpr const char* kHumanManifestFile = "human_manifest.json";
inline constexpr const char* kExpertStaticFile = "expert_static.jsonl";
inline constexpr const char* kExpertDynamicFile = "expert_dynamic.jsonl";
inline constexpr const char* kExpertManifestFile = "expert_manifest.json";
inline constexpr const char* kPredictorWeightsFile = "predictor_weights.json";
inline constexpr const char* kPredictorCurveFile = "predictor_curve.csv";
inline constexpr const char* kPlannerWeightsFile = "planner_weights.json";
inline constexpr const char* kPlannerCurveFile = "planner_curve.csv";
inline constexpr const char* kBenchmarkMetricsFile = "benchmark_metrics.csv";
inline constexpr const char* kBenchmarkTimingsFile = "benchmark_timings.csv";
inline constexpr const char* kBenchmarkSummaryFile = "benchmark_summary.json";
inline constexpr const char* kSimulationMetricsFile = "simulation_metrics.csv";
inline constexpr const char* kSimulationTimingsFile = "simulation_timings.csv";
inline constexpr const char* kSimulationTimelineFile = "simulation_timeline.json";
inline constexpr const char* kSimulationSummaryFile = "simulation_summary.json";
inline constexpr const char* kUncertaintySweepFile = "uncertainty_k_sweep.csv";
inline constexpr const char* kUncertaintySummaryFile = "uncertainty_summary.json";

/// Scenes in scene-id order: static workspaces first, the collaborative cell last.
struct LoadedScenes {
  std::vector<SceneFile> workspaces;
  SceneFile cell;
  int cell_scene_id() const { return static_cast<int>(workspaces.size()); }
  std::vector<Scene> by_id() const;
};
LoadedScenes load_scenes(const HarnessConfig& cfg);

enum class GenerateStage { Human, Expert, All };
enum class TrainTarget { Predictor, Planner };

struct GenerateReport {
  int trajectories = 0;
  int train_windows = 0, val_windows = 0, test_windows = 0;
  int static_samples = 0, dynamic_samples = 0;
  int static_paths = 0, dynamic_paths = 0;
  int skipped = 0;
};

/// Human stage: synthetic arm dataset. Expert stage: static workspaces, plus the collaborative cell
/// with MCDS forecasts when trained predictor weights exist.
GenerateReport cmd_generate(const HarnessConfig& cfg, GenerateStage stage, std::ostream& log);

/// Writes the weights and an `epoch,train_loss,val_loss` CSV. epochs overrides the config.
TrainingCurve cmd_train(const HarnessConfig& cfg, TrainTarget target, std::optional<int> epochs, std::ostream& log);

struct BenchmarkRecord {
  int scenario = 0;
  int workspace = 0;
  std::string planner;
  PlanStats stats;
  bool revalidated = true;  // accepted path passed the fine-step re-check
};

struct PlannerSummary {
  double len_mean = 0.0, len_std = 0.0;
  double time_mean = 0.0, time_std = 0.0;
  double success_rate = 0.0;
  int runs = 0;
  int invalid_paths = 0;
};

struct BenchmarkReport {
  std::vector<BenchmarkRecord> records;
  std::map<std::string, PlannerSummary> summary;
  bool failures_above_threshold = false;
};

BenchmarkReport cmd_benchmark(const HarnessConfig& cfg, std::ostream& log);

/// Per-run, per-mode outcome of the collaborative simulation.
struct MetricsRecord {
  int run = 0;
  std::string mode;
  bool success = false;       // reached the goal with no ground-truth contact
  bool reached_goal = false;
  int collisions = 0;         // ticks in contact with the true arm
  double ee_path_length = 0.0;
  double planning_time = 0.0;
  double mean_abs_acceleration = 0.0;
  double mean_abs_jerk = 0.0;
  int replans = 0;
  double first_replan_time = -1.0;  // s, -1 when never triggered
  int ticks = 0;
  int invalid_paths = 0;            // replanned paths failing the fine-step re-check
};

struct ModeSummary {
  double mean_abs_acceleration = 0.0;
  double mean_abs_jerk = 0.0;
  int collisions = 0;           // contact ticks over all runs
  int runs_with_collision = 0;
  double mean_replans = 0.0;
  double reached_fraction = 0.0;
  int invalid_paths = 0;
  int runs = 0;
};

struct SimulationReport {
  std::vector<MetricsRecord> records;
  std::map<std::string, ModeSummary> summary;
  /// Share of runs whose first replan with prediction came strictly before the current-only one
  /// (a run that never triggers without prediction counts as later); -1 when a mode is missing.
  double earlier_replan_fraction = -1.0;
};

SimulationReport cmd_simulate(const HarnessConfig& cfg, std::ostream& log);

struct KSweepRow {
  int K = 0;
  double elbow_m = 0.0;
  double wrist_m = 0.0;
  double inference_s = 0.0;
};

struct UncertaintyReport {
  std::vector<KSweepRow> sweep;
  double correlation = 0.0;
  int correlation_pairs = 0;
};

UncertaintyReport cmd_uncertainty_report(const HarnessConfig& cfg, std::ostream& log);

/// Mean absolute second and third finite differences (per joint, per step) of a trajectory
/// sampled at dt.
struct Smoothness {
  double mean_abs_acceleration = 0.0;
  double mean_abs_jerk = 0.0;
};
Smoothness trajectory_smoothness(const std::vector<JointConfig>& q, double dt);

double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Training pairs for the predictor: an evenly strided subset of a split.
std::vector<SequencePair> window_pairs(const HumanDataset& ds, const std::vector<WindowRef>& refs, int limit);

/// Exit codes of the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDivergence = 3;
inline constexpr int kExitBenchmarkFailures = 4;

}  // namespace hrc
