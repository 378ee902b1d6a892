#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "hrc/oracle_planners.hpp"
#include "hrc/predictor.hpp"
#include "hrc/workspace_graph.hpp"

namespace hrc {

/// GCN stack: layer l maps width in_l to out_l through theta[l] (in_l x out_l) and bias[l];
/// the linear head maps the summed node embedding to a 6-vector (configuration / pi).
struct GnnWeights {
  static constexpr const char* kVersion = "hrc-gnn-v1";

  std::string version = kVersion;
  std::vector<Eigen::MatrixXd> theta;
  std::vector<Eigen::VectorXd> bias;
  Eigen::MatrixXd head_W;  // 6 x h
  Eigen::VectorXd head_b;

  static GnnWeights initialize(int hidden, int layers, std::uint64_t seed, int input = GraphSchema::kFeatures);
  static GnnWeights zeros(int hidden, int layers, int input = GraphSchema::kFeatures);

  /// input, hidden..., 6
  std::vector<int> layer_sizes() const;
  std::size_t parameter_count() const;
  void validate() const;
  Eigen::VectorXd flatten() const;
  void assign(const Eigen::VectorXd& flat);
};

/// Features plus a shared, already normalised adjacency.
struct GraphInput {
  Eigen::MatrixXd H;
  std::shared_ptr<const Eigen::SparseMatrix<double>> A_hat;
};

GraphInput to_graph_input(const WorkspaceGraph& g);

/// Raw head output (normalised configuration). Throws ShapeMismatch.
Eigen::VectorXd gnn_forward(const WorkspaceGraph& g, const GnnWeights& w);
Eigen::VectorXd gnn_forward(const GraphInput& g, const GnnWeights& w);

struct PlannerSample {
  GraphInput graph;
  Eigen::VectorXd label;  // next configuration / pi
  int path_id = 0;
};

/// Sum over samples of the squared error, divided by the number of distinct paths in the batch.
/// Fills grad when given. Throws DomainError on an empty batch.
double planner_loss(const std::vector<const PlannerSample*>& batch, const GnnWeights& w, GnnWeights* grad = nullptr);

struct PlannerHyper {
  double lr = 1e-3;
  int batch_paths = 16;
  int epochs = 30;
  std::uint64_t seed = 1;
  double clip_norm = 5.0;
};

/// Mean planner_loss over a dataset, batched by path.
double planner_eval_loss(const std::vector<PlannerSample>& data, const GnnWeights& w);

/// Mini-batch Adam on planner_loss, batches formed from whole paths. Returns the best-validation
/// weights. Throws DivergenceError on a non-finite loss.
GnnWeights train_planner(const std::vector<PlannerSample>& train, const std::vector<PlannerSample>& val,
                         GnnWeights init, const PlannerHyper& hyper, TrainingCurve* curve = nullptr);

/// Caches normalised adjacencies by node-presence pattern.
class AdjacencyCache {
 public:
  explicit AdjacencyCache(GraphSchema schema) : schema_(std::move(schema)) {}
  std::shared_ptr<const Eigen::SparseMatrix<double>> get(int boxes_present, bool human_present);
  const GraphSchema& schema() const { return schema_; }

 private:
  GraphSchema schema_;
  std::map<std::pair<int, bool>, std::shared_ptr<const Eigen::SparseMatrix<double>>> cache_;
};

GraphInput make_graph_input(const JointConfig& c, const JointConfig& goal, const Scene& scene,
                            const HumanForecast* forecast, AdjacencyCache& cache);

/// Expert samples to training pairs. scenes[scene_id] supplies robot and boxes.
std::vector<PlannerSample> make_planner_samples(const std::vector<ExpertSample>& expert, const std::vector<Scene>& scenes,
                                                AdjacencyCache& cache);

struct PlannerStep {
  JointConfig next = JointConfig::Zero();
  Eigen::VectorXd raw;  // network output, normalised
};

/// One network step from c toward goal, scaled to at most max_step (max norm) and clamped to limits.
PlannerStep plan_step(const JointConfig& c, const JointConfig& goal, const Scene& scene, const HumanForecast* forecast,
                      const GnnWeights& w, double max_step, AdjacencyCache& cache);

struct BidirectionalOptions {
  int max_iters = 300;
  double max_step = 0.1;
  double edge_step = kDefaultEdgeStep;
  int perturbations = 10;
  int stuck_iters = 10;
  double stuck_eps = 1e-4;
  std::uint64_t seed = 1;
};

/// Grows one branch from the start and one from the goal, each stepping toward the other's tip,
/// and tries a straight connection between the tips before every iteration. Every accepted edge is
/// certified free at edge_step / 8. A branch never steps into a tip it could not certifiably leave,
/// and one that cannot extend at all drops its tip.
PlanResult plan_bidirectional(const JointConfig& start, const JointConfig& goal, const Scene& scene,
                              const HumanForecast* forecast, const GnnWeights& w, const BidirectionalOptions& opts,
                              AdjacencyCache& cache);

/// True iff an edge of the remaining path collides with the scene (sampled at step).
bool replan_trigger(const Path& remainder, const Scene& scene, double step = kDefaultEdgeStep);

}  // namespace hrc
