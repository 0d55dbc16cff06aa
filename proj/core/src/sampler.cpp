#include "ston/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace ston
{
std::optional<double> min_obstacle_distance(ObstacleSet const & obstacles)
{
  return obstacles.min_distance();
}

std::vector<Point> resample(std::span<Point const> polyline, double h)
{
  if (!(h > 0.0))
    throw std::invalid_argument("resample: spacing must be positive");
  if (polyline.size() < 2)
    throw std::invalid_argument("resample: need at least two points");

  std::vector<Point> out{polyline.front()};
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i)
  {
    Point const a = polyline[i];
    Point const b = polyline[i + 1];
    double const len = distance(a, b);
    auto const pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(len / h)));
    for (std::size_t j = 1; j < pieces; ++j)
    {
      double const t = static_cast<double>(j) / static_cast<double>(pieces);
      out.push_back(a + t * (b - a));
    }
    out.push_back(b);
  }
  return out;
}

std::vector<Point> resample_closed(std::span<Point const> loop, double h)
{
  if (loop.size() < 3)
    throw std::invalid_argument("resample_closed: need at least three points");
  std::vector<Point> ring(loop.begin(), loop.end());
  ring.push_back(loop.front());
  auto out = resample(ring, h);
  out.pop_back();
  return out;
}

std::vector<Point> resample_count(std::span<Point const> polyline, std::size_t count)
{
  if (polyline.size() < 2 || count < 2)
    throw std::invalid_argument("resample_count: need at least two points in and out");

  std::vector<double> cumulative{0.0};
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i)
    cumulative.push_back(cumulative.back() + distance(polyline[i], polyline[i + 1]));
  double const total = cumulative.back();

  std::vector<Point> out;
  out.reserve(count);
  std::size_t seg = 0;
  for (std::size_t j = 0; j < count; ++j)
  {
    if (j + 1 == count)
    {
      out.push_back(polyline.back());
      break;
    }
    double const s = total * static_cast<double>(j) / static_cast<double>(count - 1);
    while (seg + 2 < cumulative.size() && cumulative[seg + 1] < s)
      ++seg;
    double const len = cumulative[seg + 1] - cumulative[seg];
    double const t = len > 0.0 ? (s - cumulative[seg]) / len : 0.0;
    out.push_back(polyline[seg] + t * (polyline[seg + 1] - polyline[seg]));
  }
  return out;
}

double safe_spacing(ObstacleSet const & obstacles, std::span<Point const> path)
{
  if (auto const d = obstacles.min_distance())
    return 0.5 * *d;
  std::vector<Point> all(path.begin(), path.end());
  all.insert(all.end(), obstacles.points().begin(), obstacles.points().end());
  if (all.empty())
    throw std::invalid_argument("safe_spacing: empty scene");
  double const diag = bounding_box(all).diagonal();
  if (!(diag > 0.0))
    throw std::invalid_argument("safe_spacing: degenerate scene");
  return 0.01 * diag;
}
}  // namespace ston
