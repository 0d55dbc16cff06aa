#include "ston/extension.hpp"

#include "ston/errors.hpp"
#include "ston/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace ston
{
namespace
{
constexpr int kHalvings = 6;
constexpr double kLengthSlack = 1e-9;

Point perp(Point v) { return {-v.y, v.x}; }

std::optional<std::size_t> index_of(std::span<Point const> pts, Point p)
{
  auto const it = std::find(pts.begin(), pts.end(), p);
  if (it == pts.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - pts.begin());
}

void sort_along(std::vector<Point> & pts, Point from, Point to)
{
  Point const dir = to - from;
  std::stable_sort(pts.begin(), pts.end(),
                   [&](Point a, Point b) { return dot(a - from, dir) < dot(b - from, dir); });
}

// Hull indices of the vertices facing q_i, in walk order from q_prev to
// q_next. Empty when the neighbours are not extreme in the joint hull.
std::vector<std::size_t> facing_arc(std::span<Point const> hull, Point q_prev, Point q_next, Point q_i)
{
  std::vector<Point> all(hull.begin(), hull.end());
  all.push_back(q_prev);
  all.push_back(q_next);
  auto const joint = convex_hull(all);
  auto const ip = index_of(joint, q_prev);
  auto const in = index_of(joint, q_next);
  if (!ip || !in || *ip == *in)
    return {};

  bool const ccw = orient(q_prev, q_next, q_i) < 0;
  std::size_t const from = ccw ? *ip : *in;
  std::size_t const to = ccw ? *in : *ip;
  std::vector<std::size_t> arc;
  for (std::size_t j = (from + 1) % joint.size(); j != to; j = (j + 1) % joint.size())
  {
    auto const h = index_of(hull, joint[j]);
    if (!h)
      return {};
    arc.push_back(*h);
  }
  if (!ccw)
    std::reverse(arc.begin(), arc.end());
  return arc;
}

// Facing-arc vertices pushed along the outward bisectors of the chain
// q_prev -> arc -> q_next, which bounds hull(hull + {q_prev, q_next}).
std::vector<Point> taut_offsets(std::span<Point const> hull, Point q_prev, Point q_next, Point q_i, double delta)
{
  auto const arc = facing_arc(hull, q_prev, q_next, q_i);
  std::vector<Point> chain{q_prev};
  for (auto j : arc)
    chain.push_back(hull[j]);
  chain.push_back(q_next);
  std::vector<Point> out;
  for (std::size_t j = 1; j + 1 < chain.size(); ++j)
  {
    Point const v = chain[j];
    out.push_back(v + delta * normalized(normalized(v - chain[j - 1]) + normalized(v - chain[j + 1])));
  }
  return out;
}

struct Candidate
{
  std::vector<Point> points;
  ChainSource source = ChainSource::facing;
};

std::vector<Candidate> candidates(std::span<Point const> hull, std::span<Point const> triangle_hull, Point q_prev,
                                  Point q_next, Point q_i, double delta)
{
  std::vector<Candidate> out;
  out.push_back({insertion_points(hull, q_prev, q_next, q_i, delta), ChainSource::facing});

  if (hull.size() == 2)
  {
    Point n = normalized(perp(hull[1] - hull[0]));
    if (dot(n, q_i - hull[0]) > 0.0)
      n = -1.0 * n;
    std::vector<Point> far{hull[0] + delta * n, hull[1] + delta * n};
    sort_along(far, q_prev, q_next);
    out.push_back({std::move(far), ChainSource::complementary});
  }
  else if (hull.size() >= 3)
  {
    auto const arc = facing_arc(hull, q_prev, q_next, q_i);
    if (arc.size() >= 2)
    {
      std::size_t const n = hull.size();
      bool const forward = arc[1] == (arc[0] + 1) % n;
      auto const offsets = wedge_offsets(hull, delta);
      std::vector<Point> far;
      std::size_t j = arc.front();
      while (true)
      {
        far.push_back(offsets[j]);
        if (j == arc.back())
          break;
        j = forward ? (j + n - 1) % n : (j + 1) % n;
      }
      out.push_back({std::move(far), ChainSource::complementary});
    }
  }
  out.push_back({taut_offsets(hull, q_prev, q_next, q_i, delta), ChainSource::taut});
  if (!std::equal(hull.begin(), hull.end(), triangle_hull.begin(), triangle_hull.end()))
  {
    out.push_back({insertion_points(triangle_hull, q_prev, q_next, q_i, delta), ChainSource::triangle_hull});
    out.push_back({taut_offsets(triangle_hull, q_prev, q_next, q_i, delta), ChainSource::triangle_taut});
  }
  return out;
}

double detour_length(Point q_prev, std::span<Point const> chain, Point q_next)
{
  double len = distance(q_prev, chain.front()) + distance(chain.back(), q_next);
  for (std::size_t j = 0; j + 1 < chain.size(); ++j)
    len += distance(chain[j], chain[j + 1]);
  return len;
}

Signature class_of(StringConfig const & cfg, ObstacleSet const & obstacles)
{
  return cfg.closed ? loop_signature(cfg.weights, obstacles) : signature(cfg.weights, obstacles);
}
}  // namespace

std::optional<ObstacleId> single_bend(Point q_prev, Point q_i, Point q_next, std::span<ObstacleId const> ids,
                                      ObstacleSet const & obstacles)
{
  if (ids.empty())
    return std::nullopt;
  std::vector<Point> pts;
  for (auto id : ids)
    pts.push_back(obstacles[id]);
  auto const hull = convex_hull(pts);
  auto const arc = facing_arc(hull, q_prev, q_next, q_i);
  if (arc.size() != 1)
    return std::nullopt;
  Point const v = hull[arc.front()];
  for (std::size_t j = 0; j < ids.size(); ++j)
  {
    if (pts[j] == v)
      return ids[j];
  }
  return std::nullopt;
}

std::vector<ObstacleId> adjacent_obstacles(Point q_prev, Point q_i, Point q_next,
                                           std::span<ObstacleId const> ids,
                                           ObstacleSet const & obstacles)
{
  if (ids.empty())
    throw std::invalid_argument("adjacent_obstacles: no obstacles given");
  std::vector<Point> pts;
  pts.reserve(ids.size());
  for (auto id : ids)
    pts.push_back(obstacles[id]);
  Point const c = centroid(pts);

  std::vector<ObstacleId> out;
  for (std::size_t j = 0; j < ids.size(); ++j)
  {
    if (in_adjacent_partition(pts[j], q_prev, q_i, q_next, c))
      out.push_back(ids[j]);
  }
  if (out.empty())
  {
    std::size_t best = 0;
    for (std::size_t j = 1; j < ids.size(); ++j)
    {
      if (std::abs(signed_area2(q_prev, q_next, pts[j])) > std::abs(signed_area2(q_prev, q_next, pts[best])))
        best = j;
    }
    out.push_back(ids[best]);
  }
  return out;
}

std::vector<Point> wedge_offsets(std::span<Point const> hull, double delta)
{
  if (hull.size() < 3)
    throw std::invalid_argument("wedge_offsets: hull needs at least three vertices");
  std::size_t const n = hull.size();
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
  {
    Point const u = hull[(j + n - 1) % n];
    Point const v = hull[j];
    Point const w = hull[(j + 1) % n];
    out.push_back(v + delta * normalized(normalized(v - u) + normalized(v - w)));
  }
  return out;
}

std::vector<Point> insertion_points(std::span<Point const> hull, Point q_prev, Point q_next, Point q_i,
                                    double delta)
{
  if (hull.empty())
    throw std::invalid_argument("insertion_points: empty hull");
  if (!(delta > 0.0))
    throw std::invalid_argument("insertion_points: offset must be positive");

  if (hull.size() == 1)
  {
    Point dir = normalized(q_i - hull[0]);
    if (norm(dir) == 0.0)
      dir = normalized(perp(q_next - q_prev));
    return {hull[0] + delta * dir};
  }
  if (hull.size() == 2)
  {
    Point n = normalized(perp(hull[1] - hull[0]));
    if (dot(n, q_i - hull[0]) < 0.0)
      n = -1.0 * n;
    std::vector<Point> out{hull[0] + delta * n, hull[1] + delta * n};
    sort_along(out, q_prev, q_next);
    return out;
  }

  auto const offsets = wedge_offsets(hull, delta);
  auto const arc = facing_arc(hull, q_prev, q_next, q_i);
  std::vector<Point> out;
  if (arc.empty())
  {
    out = offsets;
    sort_along(out, q_prev, q_next);
    return out;
  }
  for (auto j : arc)
    out.push_back(offsets[j]);
  return out;
}

double default_insertion_offset(std::span<Point const> hull, ObstacleSet const & obstacles)
{
  double d = 0.0;
  if (auto const md = obstacles.min_distance())
    d = *md;
  else if (auto const b = obstacles.bounds())
    d = b->diagonal();
  double const diag = bounding_box(hull).diagonal();
  if (!(d > 0.0))
    return 0.05 * diag;
  if (!(diag > 0.0))
    return d / 4.0;
  return std::min(d / 4.0, 0.05 * diag);
}

MultiResolution resolve_multi(StringConfig & cfg, std::size_t i, std::span<ObstacleId const> ids,
                              ObstacleSet const & obstacles, double delta)
{
  if (!cfg.is_free(i))
    throw std::invalid_argument("resolve_multi: processor has no two neighbours");
  MultiResolution res;
  res.removed_index = i;
  res.removed = cfg.weights[i];
  res.q_prev = cfg.weights[cfg.prev_index(i)];
  res.q_next = cfg.weights[cfg.next_index(i)];
  res.triangle_obstacles.assign(ids.begin(), ids.end());
  res.adjacent = adjacent_obstacles(res.q_prev, res.removed, res.q_next, ids, obstacles);
  std::vector<Point> pts;
  for (auto id : res.adjacent)
    pts.push_back(obstacles[id]);
  res.hull_vertices = convex_hull(pts);
  std::vector<Point> all;
  for (auto id : ids)
    all.push_back(obstacles[id]);
  auto const triangle_hull = convex_hull(all);

  double const base = delta > 0.0 ? delta : default_insertion_offset(res.hull_vertices, obstacles);
  double const budget =
      (distance(res.q_prev, res.removed) + distance(res.removed, res.q_next)) * (1.0 + kLengthSlack);

  std::optional<Signature> before;
  try
  {
    before = class_of(cfg, obstacles);
  }
  catch (PathThroughObstacle const &)
  {
  }

  if (before && base > 0.0)
  {
    auto const at = static_cast<std::ptrdiff_t>(i);
    for (int h = 0; h <= kHalvings; ++h)
    {
      double const d = std::ldexp(base, -h);
      for (auto & cand : candidates(res.hull_vertices, triangle_hull, res.q_prev, res.q_next, res.removed, d))
      {
        if (cand.points.empty() || detour_length(res.q_prev, cand.points, res.q_next) > budget)
          continue;
        StringConfig trial = cfg;
        trial.weights.erase(trial.weights.begin() + at);
        trial.weights.insert(trial.weights.begin() + at, cand.points.begin(), cand.points.end());
        try
        {
          if (class_of(trial, obstacles) != *before)
            continue;
        }
        catch (PathThroughObstacle const &)
        {
          continue;
        }
        cfg = std::move(trial);
        res.inserted = std::move(cand.points);
        res.delta = d;
        res.chain = cand.source;
        return res;
      }
    }
  }

  res.held = true;
  res.inserted = {res.removed};
  return res;
}
}  // namespace ston
