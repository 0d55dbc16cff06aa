#pragma once

#include "ston/oracle.hpp"
#include "ston/ston.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ston::io
{
enum class Mode
{
  tighten,
  smooth,
  hull,
};

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

// StonParams overrides; unset fields keep the mode's defaults.
struct Overrides
{
  std::optional<double> beta;
  std::optional<double> horizon;
  std::optional<double> epsilon_pct;
  std::optional<std::size_t> max_sweeps;
};

struct Scene
{
  std::vector<Point> obstacles;  // deduplicated
  std::vector<Point> path;       // empty in hull mode
  bool closed = false;
  Mode mode = Mode::tighten;
  Overrides config;
  std::vector<std::string> warnings;
};

// Throws SceneError when the document is malformed or mistyped. Scenes also
// need a path of at least two points, or at least three distinct obstacles
// in hull mode.
Scene parse_scene(std::string_view json_text);
Scene load_scene(std::filesystem::path const & file);

struct RunOptions
{
  std::optional<Mode> mode;
  Overrides overrides;  // applied after the scene's own config
  bool extension = true;
  bool guard = true;
  bool oracle = false;
  std::size_t oracle_max_via = 4;
};

enum ExitCode : int
{
  exit_converged = 0,
  exit_sweep_limit = 2,
  exit_invalid_input = 3,
  exit_homotopy_violation = 4,
};

struct RunOutput
{
  Mode mode = Mode::tighten;
  StonParams params;
  std::vector<Point> initial;  // processors before the first sweep
  TightenResult result;
  std::optional<oracle::ShortestPath> oracle;
  int exit_code = exit_converged;
};

// Mode defaults, then scene config, then option overrides.
StonParams resolve_params(Mode mode, Overrides const & scene, RunOptions const & options);

// Processors before the first sweep: the path resampled at d/2 (as a loop when
// closed), or in hull mode a loop around the obstacles' bounding box inflated
// by 5%. With the extension the hull loop is its four corners; without it,
// the loop is resampled at d/2.
StringConfig initial_configuration(Scene const & scene, Mode mode, bool extension);

// Throws HomotopyViolation (exit 4). Every other exception signals invalid
// input (exit 3).
RunOutput run(Scene const & scene, RunOptions const & options);

std::string trace_csv(SweepTrace const & trace);

std::string svg(std::span<Point const> obstacles, std::span<Point const> initial,
                std::span<Point const> final_path, bool closed);

// A scene document whose path is the final configuration, plus a "result"
// object. Feeding it back to parse_scene() reproduces the final path.
std::string result_json(Scene const & scene, RunOutput const & out);

// Formats with 17 significant digits in the C locale.
std::string format_number(double v);
}  // namespace ston::io
