#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrc/collision.hpp"
#include "hrc/human_synth.hpp"
#include "hrc/workspace_graph.hpp"

namespace hrc {

/// One workspace document: robot, arm model, boxes, margin, graph schema, optional motion scripts
/// and an optional robot task (start/goal) for simulation.
struct SceneFile {
  std::string name;
  Scene scene;
  AnthropometricParams anthropometrics;
  double human_safety_margin = 0.05;
  GraphSchema schema;
  std::vector<MotionScript> scripts;
  std::optional<JointConfig> task_start;
  std::optional<JointConfig> task_goal;
};

/// Throws ConfigError on malformed documents or invalid contents.
SceneFile parse_scene(const std::string& json_text);
SceneFile load_scene_file(const std::string& path);
std::string scene_to_json(const SceneFile& file);

/// Reads a whole file; throws ConfigError when it cannot be opened.
std::string read_text_file(const std::string& path);
/// Writes atomically enough for our purposes (truncate + write); throws Error on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hrc
