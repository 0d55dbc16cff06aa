#include "ston/homotopy.hpp"

#include "ston/errors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace ston
{
namespace
{
std::optional<ObstacleId> touching_obstacle(Point v, ObstacleSet const & obstacles, double tol)
{
  auto const ids = obstacles.query_box({v.x - tol, v.y - tol, v.x + tol, v.y + tol});
  std::optional<ObstacleId> best;
  double best_d = tol;
  for (auto id : ids)
  {
    double const d = distance(v, obstacles[id]);
    if (d <= best_d)
    {
      best = id;
      best_d = d;
    }
  }
  return best;
}

struct Vertex
{
  Point p;
  std::optional<ObstacleId> touch;
};

// Collapses runs of vertices resting on the same obstacle (or coinciding) and
// pushes every touching interior vertex off its obstacle to the outside of
// the turn.
std::vector<Point> regularize(std::span<Point const> path, ObstacleSet const & obstacles,
                              ContactTolerance const & tol)
{
  std::vector<Vertex> verts;
  verts.reserve(path.size());
  for (auto const & p : path)
  {
    if (!is_finite(p))
      throw std::invalid_argument("signature: non-finite path coordinate");
    Vertex v{p, touching_obstacle(p, obstacles, tol.touch)};
    if (v.touch)
      v.p = obstacles[*v.touch];
    if (!verts.empty())
    {
      Vertex const & last = verts.back();
      bool const same_touch = v.touch && last.touch && *v.touch == *last.touch;
      bool const coincide = !v.touch && !last.touch && distance(v.p, last.p) <= tol.touch;
      if (same_touch || coincide)
        continue;
    }
    verts.push_back(v);
  }
  // A path that started and ended at the same place must keep both terminals.
  if (verts.size() == 1 && path.size() > 1)
    verts.push_back(verts.front());

  if (verts.front().touch || verts.back().touch)
    throw PathThroughObstacle("signature: path terminal lies on an obstacle");

  std::vector<Point> out;
  out.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
  {
    if (!verts[i].touch)
    {
      out.push_back(verts[i].p);
      continue;
    }
    Point const p = verts[i].p;
    Point const a = verts[i - 1].p;
    Point const b = verts[i + 1].p;
    Point const inward = normalized(a - p) + normalized(b - p);
    if (norm(inward) < 1e-9)
      throw PathThroughObstacle("signature: path runs straight through an obstacle");
    out.push_back(p - push_distance(tol, p, a, b) * normalized(inward));
  }
  return out;
}

void append_segment_crossings(Point a, Point b, ObstacleSet const & obstacles,
                              std::vector<Crossing> & word)
{
  auto const by_x = obstacles.by_x();
  double const lo = std::min(a.x, b.x);
  double const hi = std::max(a.x, b.x);
  auto first = std::lower_bound(by_x.begin(), by_x.end(), lo,
                                [&](ObstacleId id, double x) { return obstacles[id].x < x; });

  struct Hit
  {
    double t;
    Crossing c;
  };
  std::vector<Hit> hits;
  bool const rightward = a.x < b.x;
  for (auto it = first; it != by_x.end() && obstacles[*it].x <= hi; ++it)
  {
    Point const p = obstacles[*it];
    if (on_segment(p, a, b))
      throw PathThroughObstacle("signature: path segment passes through an obstacle");
    bool const a_left = a.x < p.x;
    bool const b_left = b.x < p.x;
    if (a_left == b_left)
      continue;
    double const area = signed_area2(a, b, p);
    bool const below = rightward ? area > 0.0 : area < 0.0;
    if (!below)
      continue;
    hits.push_back({(p.x - a.x) / (b.x - a.x), {*it, rightward ? 1 : -1}});
  }
  std::sort(hits.begin(), hits.end(), [&](Hit const & l, Hit const & r) {
    if (l.t != r.t)
      return l.t < r.t;
    return rightward ? l.c.obstacle < r.c.obstacle : l.c.obstacle > r.c.obstacle;
  });
  for (auto const & h : hits)
    word.push_back(h.c);
}

std::vector<Crossing> raw_word(std::span<Point const> path, ObstacleSet const & obstacles)
{
  std::vector<Crossing> word;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
  {
    if (path[i] == path[i + 1])
      continue;
    append_segment_crossings(path[i], path[i + 1], obstacles, word);
  }
  return word;
}

bool inverse(Crossing const & a, Crossing const & b) { return a.obstacle == b.obstacle && a.sign == -b.sign; }
}  // namespace

double push_distance(ContactTolerance const & tol, Point p, Point a, Point b)
{
  return std::min(tol.push, 0.25 * std::min(distance(a, p), distance(b, p)));
}

ContactTolerance contact_tolerance(ObstacleSet const & obstacles, std::span<Point const> path)
{
  double scale = 0.0;
  if (auto const ob = obstacles.bounds())
    scale = ob->max_extent();
  if (!(scale > 0.0) && !path.empty())
    scale = bounding_box(path).max_extent();
  scale = std::max(scale, 1e-300);
  double push = 1e-7 * scale;
  if (auto const d = obstacles.min_distance())
    push = std::min(push, *d / 8.0);
  return {std::min(1e-9 * scale, push / 10.0), push};
}

std::string to_string(Signature const & s)
{
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.word.size(); ++i)
  {
    if (i)
      os << ' ';
    os << s.word[i].obstacle << (s.word[i].sign > 0 ? '+' : '-');
  }
  os << ']';
  return os.str();
}

Signature reduce(std::vector<Crossing> word)
{
  Signature out;
  out.word.reserve(word.size());
  for (auto const & c : word)
  {
    if (!out.word.empty() && inverse(out.word.back(), c))
      out.word.pop_back();
    else
      out.word.push_back(c);
  }
  return out;
}

Signature signature(std::span<Point const> path, ObstacleSet const & obstacles)
{
  if (path.size() < 2)
    throw std::invalid_argument("signature: path needs at least two points");
  if (obstacles.empty())
    return {};
  auto const tol = contact_tolerance(obstacles, path);
  auto const clean = regularize(path, obstacles, tol);
  return reduce(raw_word(clean, obstacles));
}

Signature loop_signature(std::span<Point const> loop, ObstacleSet const & obstacles)
{
  if (loop.size() < 3)
    throw std::invalid_argument("loop_signature: loop needs at least three points");
  if (obstacles.empty())
    return {};
  auto const tol = contact_tolerance(obstacles, loop);

  std::size_t start = loop.size();
  for (std::size_t i = 0; i < loop.size(); ++i)
  {
    if (!touching_obstacle(loop[i], obstacles, tol.touch))
    {
      start = i;
      break;
    }
  }
  if (start == loop.size())
    throw PathThroughObstacle("loop_signature: every loop vertex rests on an obstacle");

  std::vector<Point> cut;
  cut.reserve(loop.size() + 1);
  for (std::size_t i = 0; i <= loop.size(); ++i)
    cut.push_back(loop[(start + i) % loop.size()]);

  auto word = reduce(raw_word(regularize(cut, obstacles, tol), obstacles)).word;

  std::size_t lo = 0;
  std::size_t hi = word.size();
  while (hi - lo >= 2 && inverse(word[lo], word[hi - 1]))
  {
    ++lo;
    --hi;
  }
  std::vector<Crossing> core(word.begin() + static_cast<std::ptrdiff_t>(lo),
                             word.begin() + static_cast<std::ptrdiff_t>(hi));

  std::vector<Crossing> best = core;
  for (std::size_t r = 1; r < core.size(); ++r)
  {
    std::vector<Crossing> rot(core.begin() + static_cast<std::ptrdiff_t>(r), core.end());
    rot.insert(rot.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r));
    if (rot < best)
      best = std::move(rot);
  }
  return {std::move(best)};
}

bool homotopic(std::span<Point const> a, std::span<Point const> b, ObstacleSet const & obstacles)
{
  if (a.size() < 2 || b.size() < 2 || !(a.front() == b.front()) || !(a.back() == b.back()))
    throw std::invalid_argument("homotopic: paths must share both terminals");
  return signature(a, obstacles) == signature(b, obstacles);
}

bool freely_homotopic_loops(std::span<Point const> a, std::span<Point const> b,
                            ObstacleSet const & obstacles)
{
  return loop_signature(a, obstacles) == loop_signature(b, obstacles);
}
}  // namespace ston
