#include "ston/ston.hpp"

#include "ston/errors.hpp"
#include "ston/extension.hpp"
#include "ston/homotopy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ston
{
namespace
{
// Position a neighbour resting on |p| is read at: pushed off to the outside of
// its own turn. Flat turns keep the neighbour where it is.
Point pushed_off(StringConfig const & cfg, std::size_t neighbour, std::size_t self, Point p,
                 ContactTolerance const & tol)
{
  Point const at = cfg.weights[neighbour];
  // The neighbour's other side, skipping processors resting on the same spot.
  bool const backwards = cfg.next_index(neighbour) == self;
  std::size_t j = neighbour;
  for (std::size_t steps = 0; steps < cfg.size(); ++steps)
  {
    if (!cfg.closed && (j == 0 || j + 1 == cfg.size()))
      break;
    j = backwards ? cfg.prev_index(j) : cfg.next_index(j);
    if (distance(cfg.weights[j], p) > tol.touch)
      break;
  }
  Point const other = cfg.weights[j];
  Point const inward = normalized(other - p) + normalized(cfg.weights[self] - p);
  if (distance(other, p) <= tol.touch || norm(inward) < 1e-9)
    return at;
  return p - push_distance(tol, p, other, cfg.weights[self]) * normalized(inward);
}
}  // namespace

void validate(StringConfig const & cfg)
{
  if (cfg.size() < 3)
    throw std::invalid_argument("StringConfig: at least three processors are required");
  for (auto const & w : cfg.weights)
  {
    if (!is_finite(w))
      throw std::invalid_argument("StringConfig: non-finite weight");
  }
}

void StonParams::validate() const
{
  if (!(beta > 0.0 && beta < 0.5))
    throw std::invalid_argument("StonParams: beta must lie in (0, 0.5)");
  if (!(horizon >= 1.0))
    throw std::invalid_argument("StonParams: horizon T must be at least 1");
  if (!(epsilon_pct > 0.0))
    throw std::invalid_argument("StonParams: epsilon_pct must be positive");
  if (!(alpha_cap >= beta && alpha_cap < 1.0))
    throw std::invalid_argument("StonParams: alpha_cap must lie in [beta, 1)");
  if (max_sweeps == 0)
    throw std::invalid_argument("StonParams: max_sweeps must be positive");
  if (selected_alpha && !(*selected_alpha >= 0.0 && *selected_alpha <= 1.0))
    throw std::invalid_argument("StonParams: selected_alpha must lie in [0, 1]");
}

StonParams tighten_defaults() { return {}; }

StonParams smooth_defaults()
{
  StonParams p;
  p.epsilon_pct = 0.1;
  return p;
}

StonParams hull_defaults()
{
  StonParams p;
  p.beta = 0.4;
  p.horizon = 2;
  p.max_sweeps = 1000;
  return p;
}

double phi(StringConfig const & cfg)
{
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cfg.size(); ++i)
    sum += squared_distance(cfg.weights[i], cfg.weights[i + 1]);
  if (cfg.closed && cfg.size() > 2)
    sum += squared_distance(cfg.weights.back(), cfg.weights.front());
  return sum;
}

double string_length(StringConfig const & cfg) { return polyline_length(cfg.weights, cfg.closed); }

double alpha(std::size_t t, FeatureKind kind, StonParams const & params)
{
  switch (kind)
  {
  case FeatureKind::created:
    return 1.0;
  case FeatureKind::selected:
    if (params.selected_alpha)
      return *params.selected_alpha;
    return std::min(params.beta * (1.0 + static_cast<double>(t) / params.horizon), params.alpha_cap);
  case FeatureKind::multi:
    break;
  }
  return 0.0;
}

Feature compute_feature(std::size_t i, StringConfig const & cfg, ObstacleSet const & obstacles)
{
  if (!cfg.is_free(i))
    throw std::invalid_argument("compute_feature: processor has no two neighbours");
  std::size_t const ip = cfg.prev_index(i);
  std::size_t const in = cfg.next_index(i);
  Point const prev = cfg.weights[ip];
  Point const self = cfg.weights[i];
  Point const next = cfg.weights[in];
  Triangle const tri{prev, self, next};

  auto ids = obstacles.query_triangle(tri);
  if (!ids.empty())
  {
    auto const tol = contact_tolerance(obstacles, cfg.weights);
    std::erase_if(ids, [&](ObstacleId id) {
      Point const p = obstacles[id];
      if (distance(p, self) <= tol.touch)
        return false;
      if (distance(p, prev) <= tol.touch && cfg.is_free(ip))
        return !point_in_triangle(p, {pushed_off(cfg, ip, i, p, tol), self, next});
      if (distance(p, next) <= tol.touch && cfg.is_free(in))
        return !point_in_triangle(p, {prev, self, pushed_off(cfg, in, i, p, tol)});
      return false;
    });
  }

  if (ids.empty())
    return {midpoint(prev, next), FeatureKind::created, {}};
  if (ids.size() == 1)
    return {obstacles[ids.front()], FeatureKind::selected, std::move(ids)};
  return {self, FeatureKind::multi, std::move(ids)};
}

SweepResult sweep(StringConfig & cfg, ObstacleSet const & obstacles, StonParams const & params,
                  std::size_t t, SweepObserver const * observer)
{
  SweepResult result;
  double const touch = contact_tolerance(obstacles, cfg.weights).touch;
  std::size_t i = cfg.closed ? 0 : 1;
  auto const end = [&] { return cfg.closed ? cfg.size() : cfg.size() - 1; };
  while (i < end())
  {
    Feature f = compute_feature(i, cfg, obstacles);
    if (f.kind == FeatureKind::multi && params.extension)
    {
      if (auto const v = single_bend(cfg.weights[cfg.prev_index(i)], cfg.weights[i], cfg.weights[cfg.next_index(i)],
                                     f.obstacles, obstacles))
        f = {obstacles[*v], FeatureKind::selected, {*v}};
    }
    if (f.kind != FeatureKind::multi)
    {
      f.kind == FeatureKind::created ? ++result.events.created : ++result.events.selected;
      Point const w = cfg.weights[i];
      Point updated = update_weight(w, f.vector, alpha(t, f.kind, params));
      if (f.kind == FeatureKind::selected && distance(updated, f.vector) <= touch)
        updated = f.vector;
      result.max_displacement = std::max(result.max_displacement, distance(w, updated));
      cfg.weights[i] = updated;
      ++i;
      continue;
    }

    ++result.events.multi;
    if (!params.extension)
    {
      ++i;
      continue;
    }
    bool const report = observer && observer->on_resolve;
    StringConfig before;
    if (report)
      before = cfg;
    auto const res = resolve_multi(cfg, i, f.obstacles, obstacles);
    if (report)
      observer->on_resolve(before, cfg, res);
    i += res.inserted.size();
  }
  return result;
}

double convergence_epsilon(StringConfig const & cfg, ObstacleSet const & obstacles,
                           StonParams const & params)
{
  double extent = 0.0;
  if (auto const b = obstacles.bounds())
    extent = b->max_extent();
  if (!(extent > 0.0))
    extent = bounding_box(cfg.weights).max_extent();
  return params.epsilon_pct / 100.0 * extent;
}

TightenResult tighten(StringConfig cfg, ObstacleSet const & obstacles, StonParams const & params,
                      SweepObserver const * observer)
{
  validate(cfg);
  params.validate();

  auto const class_of = [&](StringConfig const & c) {
    return c.closed ? loop_signature(c.weights, obstacles) : signature(c.weights, obstacles);
  };

  TightenResult out;
  out.epsilon = convergence_epsilon(cfg, obstacles, params);
  Signature initial;
  if (params.homotopy_guard)
    initial = class_of(cfg);

  for (std::size_t t = 0; t < params.max_sweeps; ++t)
  {
    auto const res = sweep(cfg, obstacles, params, t, observer);
    SweepRecord rec;
    rec.sweep = t + 1;
    rec.length = string_length(cfg);
    rec.phi = phi(cfg);
    rec.max_displacement = res.max_displacement;
    rec.processors = cfg.size();
    rec.events = res.events;
    out.trace.push_back(rec);

    if (params.homotopy_guard)
    {
      try
      {
        if (class_of(cfg) != initial)
          throw HomotopyViolation("homotopy class changed during sweep " + std::to_string(rec.sweep));
      }
      catch (PathThroughObstacle const & e)
      {
        throw HomotopyViolation("sweep " + std::to_string(rec.sweep) + ": " + e.what());
      }
    }
    if (observer && observer->on_sweep)
      observer->on_sweep(rec, cfg);

    bool const quiet = !params.extension || res.events.multi == 0;
    if (quiet && res.max_displacement < out.epsilon)
    {
      out.status = Status::converged;
      break;
    }
  }
  out.config = std::move(cfg);
  return out;
}
}  // namespace ston
