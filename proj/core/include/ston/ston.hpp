#pragma once

#include "ston/geometry.hpp"
#include "ston/obstacle_set.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace ston
{
// The processor chain. Open strings keep both terminals fixed; closed loops
// wrap neighbours and update every processor.
struct StringConfig
{
  std::vector<Point> weights;
  bool closed = false;

  std::size_t size() const { return weights.size(); }
  std::size_t prev_index(std::size_t i) const { return i == 0 ? weights.size() - 1 : i - 1; }
  std::size_t next_index(std::size_t i) const { return i + 1 == weights.size() ? 0 : i + 1; }
  bool is_free(std::size_t i) const { return closed || (i > 0 && i + 1 < weights.size()); }
};

// Throws std::invalid_argument for fewer than three processors or
// non-finite weights.
void validate(StringConfig const & cfg);

struct StonParams
{
  double beta = 0.01;          // learning constant, 0 < beta < 0.5
  double horizon = 5000.0;     // expected sweeps to convergence (T)
  double epsilon_pct = 0.001;  // percent of the obstacles' largest extent
  std::size_t max_sweeps = 5000;
  double alpha_cap = 0.5;
  bool homotopy_guard = true;
  bool extension = true;  // resolve triangles holding several obstacles
  // Replaces the schedule for selected features when set. Any value in
  // [0, 1] is accepted, including those above alpha_cap.
  std::optional<double> selected_alpha;

  void validate() const;
};

StonParams tighten_defaults();
StonParams smooth_defaults();
StonParams hull_defaults();

enum class FeatureKind
{
  created,
  selected,
  multi,
};

struct Feature
{
  Point vector;
  FeatureKind kind = FeatureKind::created;
  std::vector<ObstacleId> obstacles;  // one for selected, several for multi
};

struct SweepEvents
{
  std::size_t created = 0;
  std::size_t selected = 0;
  std::size_t multi = 0;
};

struct SweepRecord
{
  std::size_t sweep = 0;  // 1-based; the learning rate uses sweep - 1
  double length = 0.0;
  double phi = 0.0;
  double max_displacement = 0.0;
  std::size_t processors = 0;
  SweepEvents events;
};

using SweepTrace = std::vector<SweepRecord>;

enum class Status
{
  converged,
  sweep_limit,
};

struct MultiResolution;

struct SweepObserver
{
  std::function<void(SweepRecord const &, StringConfig const &)> on_sweep;
  std::function<void(StringConfig const & before, StringConfig const & after, MultiResolution const &)>
      on_resolve;
};

// Sum of squared segment lengths, the wrap segment included when closed.
double phi(StringConfig const & cfg);

double string_length(StringConfig const & cfg);

// 1 for created features, the capped ramp beta (1 + t / T) for selected ones.
double alpha(std::size_t t, FeatureKind kind, StonParams const & params);

// Attractor for processor |i| from the triangle it spans with its current
// neighbours. An obstacle resting on a neighbour counts only if it would still
// be inside after being read as sitting on the concave side of the
// neighbour's turn.
Feature compute_feature(std::size_t i, StringConfig const & cfg, ObstacleSet const & obstacles);

inline Point update_weight(Point w, Point x, double a) { return w + a * (x - w); }

struct SweepResult
{
  double max_displacement = 0.0;
  SweepEvents events;
};

// One Gauss-Seidel pass over the free processors in ascending order. Multi
// triangles go to the extension, or leave the processor in place when the
// extension is disabled. Processors inserted during the pass are not
// visited until the next one.
SweepResult sweep(StringConfig & cfg, ObstacleSet const & obstacles, StonParams const & params,
                  std::size_t t, SweepObserver const * observer = nullptr);

// Absolute convergence threshold for a run.
double convergence_epsilon(StringConfig const & cfg, ObstacleSet const & obstacles,
                           StonParams const & params);

struct TightenResult
{
  StringConfig config;
  SweepTrace trace;
  Status status = Status::sweep_limit;
  double epsilon = 0.0;
};

// Sweeps until the largest displacement of a structurally quiet sweep drops
// below the threshold, or max_sweeps is reached. With the guard on, the
// homotopy class is compared against the initial one after every sweep and a
// mismatch raises HomotopyViolation.
TightenResult tighten(StringConfig cfg, ObstacleSet const & obstacles, StonParams const & params,
                      SweepObserver const * observer = nullptr);
}  // namespace ston
