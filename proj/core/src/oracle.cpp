#include "ston/oracle.hpp"

#include "ston/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ston::oracle
{
namespace
{
class Search
{
public:
  Search(std::span<Point const> path, ObstacleSet const & obstacles, std::size_t max_via)
      : m_obstacles(obstacles), m_s(path.front()), m_t(path.back()), m_max_via(max_via),
        m_target(signature(path, obstacles)), m_push(contact_tolerance(obstacles, path).push)
  {
  }

  ShortestPath run()
  {
    std::vector<ObstacleId> seq;
    visit(seq, 0.0);
    return m_best;
  }

private:
  void visit(std::vector<ObstacleId> & seq, double partial)
  {
    Point const last = seq.empty() ? m_s : m_obstacles[seq.back()];
    double const total = partial + distance(last, m_t);
    if (total < best_length() && matches(seq))
    {
      m_best.status = SearchStatus::found;
      m_best.via = seq;
      m_best.length = total;
      m_best.path.assign(1, m_s);
      for (auto id : seq)
        m_best.path.push_back(m_obstacles[id]);
      m_best.path.push_back(m_t);
    }
    if (seq.size() == m_max_via)
      return;
    for (ObstacleId id = 0; id < m_obstacles.size(); ++id)
    {
      if (!seq.empty() && seq.back() == id)
        continue;
      Point const p = m_obstacles[id];
      double const next = partial + distance(last, p);
      if (next + distance(p, m_t) >= best_length())
        continue;
      seq.push_back(id);
      visit(seq, next);
      seq.pop_back();
    }
  }

  double best_length() const
  {
    return m_best.status == SearchStatus::found ? m_best.length : std::numeric_limits<double>::infinity();
  }

  // True iff some reading of the via sequence, each via passed on the outside
  // of its turn (either side when it does not turn), has the target class.
  bool matches(std::vector<ObstacleId> const & seq) const
  {
    std::vector<Point> exact{m_s};
    for (auto id : seq)
      exact.push_back(m_obstacles[id]);
    exact.push_back(m_t);

    std::vector<std::vector<Point>> options(seq.size());
    for (std::size_t j = 0; j < seq.size(); ++j)
    {
      Point const a = exact[j];
      Point const p = exact[j + 1];
      Point const b = exact[j + 2];
      Point const inward = normalized(a - p) + normalized(b - p);
      if (orient(a, p, b) != 0 && norm(inward) > 1e-9)
      {
        options[j] = {p - m_push * normalized(inward)};
      }
      else
      {
        Point const d = normalized(b - a);
        Point const n{-d.y, d.x};
        options[j] = {p + m_push * n, p - m_push * n};
      }
    }

    std::vector<std::size_t> pick(seq.size(), 0);
    std::vector<Point> trial = exact;
    while (true)
    {
      for (std::size_t j = 0; j < seq.size(); ++j)
        trial[j + 1] = options[j][pick[j]];
      try
      {
        if (signature(trial, m_obstacles) == m_target)
          return true;
      }
      catch (PathThroughObstacle const &)
      {
      }
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == options[j].size())
        pick[j++] = 0;
      if (j == pick.size())
        return false;
    }
  }

  ObstacleSet const & m_obstacles;
  Point m_s;
  Point m_t;
  std::size_t m_max_via;
  Signature m_target;
  double m_push;
  ShortestPath m_best;
};
}  // namespace

ShortestPath shortest_homotopic(std::span<Point const> path, ObstacleSet const & obstacles,
                                std::size_t max_via)
{
  if (path.size() < 2)
    throw std::invalid_argument("shortest_homotopic: path needs at least two points");
  return Search(path, obstacles, max_via).run();
}

std::vector<Point> hull(std::span<Point const> points)
{
  if (points.empty())
    throw std::invalid_argument("oracle::hull: no points");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1)
    return pts;

  std::vector<Point> out;
  Point p = pts.front();
  for (std::size_t guard = 0; guard <= pts.size(); ++guard)
  {
    out.push_back(p);
    Point q = p == pts[0] ? pts[1] : pts[0];
    for (auto const & r : pts)
    {
      if (r == p)
        continue;
      int const o = orient(p, q, r);
      if (o < 0 || (o == 0 && squared_distance(p, r) > squared_distance(p, q)))
        q = r;
    }
    p = q;
    if (p == out.front())
      return out;
  }
  throw std::logic_error("oracle::hull: march did not close");
}

std::vector<ObstacleId> query_triangle(ObstacleSet const & obstacles, Triangle const & t)
{
  std::vector<ObstacleId> out;
  for (ObstacleId id = 0; id < obstacles.size(); ++id)
  {
    if (point_in_triangle(obstacles[id], t))
      out.push_back(id);
  }
  return out;
}
}  // namespace ston::oracle
