#include "ston/geometry.hpp"

#include <algorithm>
#include <limits>

namespace ston
{
namespace
{
constexpr double kOrientEps = 1e-12;

std::pair<Point, Point> farthest_pair(Point a, Point b, Point c)
{
  double const ab = squared_distance(a, b);
  double const bc = squared_distance(b, c);
  double const ca = squared_distance(c, a);
  if (ab >= bc && ab >= ca)
    return {a, b};
  if (bc >= ca)
    return {b, c};
  return {c, a};
}
}  // namespace

Box bounding_box(std::span<Point const> points)
{
  if (points.empty())
    throw std::invalid_argument("bounding_box: empty point set");
  Box box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (auto const & p : points.subspan(1))
  {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

Box bounding_box(Triangle const & t)
{
  Point const pts[] = {t.a, t.b, t.c};
  return bounding_box(pts);
}

double orient_tolerance(Point a, Point b, Point c)
{
  double const w = std::max({a.x, b.x, c.x}) - std::min({a.x, b.x, c.x});
  double const h = std::max({a.y, b.y, c.y}) - std::min({a.y, b.y, c.y});
  double const s = std::max(w, h);
  return kOrientEps * s * s;
}

int orient(Point a, Point b, Point c)
{
  double const area = signed_area2(a, b, c);
  double const tol = orient_tolerance(a, b, c);
  if (area > tol)
    return 1;
  if (area < -tol)
    return -1;
  return 0;
}

bool on_segment(Point p, Point a, Point b)
{
  if (orient(a, b, p) != 0)
    return false;
  Point const ab = b - a;
  double const len2 = dot(ab, ab);
  if (len2 == 0.0)
    return squared_distance(p, a) <= orient_tolerance(a, b, p);
  double const t = dot(p - a, ab) / len2;
  return t >= -kOrientEps && t <= 1.0 + kOrientEps;
}

bool point_in_triangle(Point p, Triangle const & t)
{
  if (orient(t.a, t.b, t.c) == 0)
  {
    auto const [u, v] = farthest_pair(t.a, t.b, t.c);
    return on_segment(p, u, v);
  }
  int const o1 = orient(t.a, t.b, p);
  int const o2 = orient(t.b, t.c, p);
  int const o3 = orient(t.c, t.a, p);
  bool const has_neg = o1 < 0 || o2 < 0 || o3 < 0;
  bool const has_pos = o1 > 0 || o2 > 0 || o3 > 0;
  return !(has_neg && has_pos);
}

bool segments_intersect(Point a, Point b, Point c, Point d)
{
  if (segments_cross_properly(a, b, c, d))
    return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

bool segments_cross_properly(Point a, Point b, Point c, Point d)
{
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

std::vector<Point> convex_hull(std::span<Point const> points)
{
  if (points.empty())
    throw std::invalid_argument("convex_hull: empty point set");

  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point const & l, Point const & r) {
    return l.x < r.x || (l.x == r.x && l.y < r.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1)
    return pts;

  std::vector<Point> hull(2 * pts.size());
  size_t k = 0;
  for (auto const & p : pts)
  {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0)
      --k;
    hull[k++] = p;
  }
  for (size_t i = pts.size() - 1, lower = k + 1; i-- > 0;)
  {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0)
      --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Point centroid(std::span<Point const> points)
{
  if (points.empty())
    throw std::invalid_argument("centroid: empty point set");
  double sx = 0.0;
  double sy = 0.0;
  for (auto const & p : points)
  {
    sx += p.x;
    sy += p.y;
  }
  auto const n = static_cast<double>(points.size());
  return {sx / n, sy / n};
}

double polyline_length(std::span<Point const> points, bool closed)
{
  if (points.size() < 2 || (closed && points.size() < 3))
    throw std::invalid_argument("polyline_length: too few points");
  double len = 0.0;
  for (size_t i = 0; i + 1 < points.size(); ++i)
    len += distance(points[i], points[i + 1]);
  if (closed)
    len += distance(points.back(), points.front());
  return len;
}

bool in_adjacent_partition(Point p, Point q_prev, Point q_i, Point q_next, Point c)
{
  Triangle const outer{q_prev, q_i, q_next};
  if (!point_in_triangle(p, outer) || !point_in_triangle(c, outer))
    throw std::invalid_argument("in_adjacent_partition: point outside the processor triangle");

  if (on_segment(p, q_prev, c) || on_segment(p, c, q_next))
    return true;
  return !point_in_triangle(p, Triangle{q_prev, c, q_next});
}

bool point_in_polygon(Point p, std::span<Point const> polygon)
{
  size_t const n = polygon.size();
  if (n == 0)
    return false;
  if (n == 1)
    return p == polygon[0];
  for (size_t i = 0; i < n; ++i)
  {
    if (on_segment(p, polygon[i], polygon[(i + 1) % n]))
      return true;
  }
  if (n == 2)
    return false;

  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++)
  {
    Point const & a = polygon[i];
    Point const & b = polygon[j];
    if ((a.y > p.y) != (b.y > p.y))
    {
      double const x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x)
        inside = !inside;
    }
  }
  return inside;
}

double point_segment_distance(Point p, Point a, Point b)
{
  Point const ab = b - a;
  double const len2 = dot(ab, ab);
  if (len2 == 0.0)
    return distance(p, a);
  double const t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

double point_boundary_distance(Point p, std::span<Point const> polygon)
{
  if (polygon.empty())
    throw std::invalid_argument("point_boundary_distance: empty polygon");
  if (polygon.size() == 1)
    return distance(p, polygon[0]);
  double best = std::numeric_limits<double>::infinity();
  size_t const n = polygon.size();
  size_t const edges = n == 2 ? 1 : n;
  for (size_t i = 0; i < edges; ++i)
    best = std::min(best, point_segment_distance(p, polygon[i], polygon[(i + 1) % n]));
  return best;
}
}  // namespace ston
