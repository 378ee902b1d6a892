#pragma once

#include <string>
#include <vector>

#include "hrc/human_synth.hpp"
#include "hrc/oracle_planners.hpp"

namespace hrc {

/// One JSON line per trajectory: {id, label, split, rate, bones: [[6]...]}.
std::string human_dataset_to_jsonl(const HumanDataset& ds);
/// Rebuilds joint positions from the bones and re-indexes the windows. Throws SchemaMismatch.
HumanDataset human_dataset_from_jsonl(const std::string& text, const AnthropometricParams& params);

/// One JSON line per pair: {scene_id, path_id, snapshot: {goal, human}, c_i, c_next}; human is null
/// or {positions: [k][h][shoulder, elbow, wrist], sigma: [h][elbow, wrist]}.
std::string expert_dataset_to_jsonl(const std::vector<ExpertSample>& samples);
std::vector<ExpertSample> expert_dataset_from_jsonl(const std::string& text);

}  // namespace hrc
