#pragma once

#include <string>

#include "hrc/gnn_planner.hpp"
#include "hrc/predictor.hpp"

namespace hrc {

// Weight files: {"version", "layer_sizes", "arrays": [{"name", "rows", "cols", "data" (row-major)}]}.
// Doubles round-trip exactly. Loading throws SchemaMismatch on a wrong version tag or shape.

std::string predictor_weights_to_json(const PredictorWeights& w);
PredictorWeights predictor_weights_from_json(const std::string& text);
std::string gnn_weights_to_json(const GnnWeights& w);
GnnWeights gnn_weights_from_json(const std::string& text);

void save_predictor_weights(const std::string& path, const PredictorWeights& w);
PredictorWeights load_predictor_weights(const std::string& path);
void save_gnn_weights(const std::string& path, const GnnWeights& w);
GnnWeights load_gnn_weights(const std::string& path);

}  // namespace hrc
