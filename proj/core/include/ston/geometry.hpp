#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace ston
{
struct Point
{
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(Point const &, Point const &) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline double squared_distance(Point a, Point b) { return dot(b - a, b - a); }
inline Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Unit vector along |v|, or the zero vector when |v| vanishes.
inline Point normalized(Point v)
{
  double const n = norm(v);
  return n > 0.0 ? Point{v.x / n, v.y / n} : Point{};
}

// Three successive processor weights; may be degenerate.
struct Triangle
{
  Point a;
  Point b;
  Point c;
};

struct Box
{
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  double max_extent() const { return std::max(width(), height()); }
  double diagonal() const { return std::hypot(width(), height()); }
  bool contains(Point p) const
  {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
};

// Bounding box of a non-empty point set.
Box bounding_box(std::span<Point const> points);
Box bounding_box(Triangle const & t);

// Collinearity tolerance on the doubled signed area of (a, b, c):
// 1e-12 times the squared extent of their bounding box.
double orient_tolerance(Point a, Point b, Point c);

// Doubled signed area of (a, b, c) without any tolerance.
inline double signed_area2(Point a, Point b, Point c) { return cross(b - a, c - a); }

// +1 counter-clockwise, -1 clockwise, 0 collinear within orient_tolerance.
int orient(Point a, Point b, Point c);

// True iff |p| lies on the closed segment [a, b] within orient tolerance.
bool on_segment(Point p, Point a, Point b);

// Closed-triangle membership. Degenerate triangles contain exactly the
// points of the segment spanned by their three vertices.
bool point_in_triangle(Point p, Triangle const & t);

// True iff the closed segments [a, b] and [c, d] share a point.
bool segments_intersect(Point a, Point b, Point c, Point d);

// True iff the open segments cross at a single interior point of both.
bool segments_cross_properly(Point a, Point b, Point c, Point d);

// Monotone-chain hull, CCW, starting at the leftmost-then-lowest vertex.
// Collinear and duplicate points are dropped; an all-collinear input yields
// its two extreme points and a single distinct point yields itself.
std::vector<Point> convex_hull(std::span<Point const> points);

Point centroid(std::span<Point const> points);

double polyline_length(std::span<Point const> points, bool closed);

// Membership in the closed quadrilateral (q_prev, q_i, q_next, c): the part of
// the triangle (q_prev, q_i, q_next) cut off from the chord by the segments
// q_prev-c and c-q_next. Points on those two segments belong to it.
bool in_adjacent_partition(Point p, Point q_prev, Point q_i, Point q_next, Point c);

// Closed-polygon containment for a simple polygon (boundary counts).
bool point_in_polygon(Point p, std::span<Point const> polygon);

double point_segment_distance(Point p, Point a, Point b);

// Distance from |p| to the boundary of a closed polyline, which may
// degenerate to a segment or a point.
double point_boundary_distance(Point p, std::span<Point const> polygon);
}  // namespace ston
