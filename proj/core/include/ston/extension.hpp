#pragma once

#include "ston/geometry.hpp"
#include "ston/obstacle_set.hpp"
#include "ston/ston.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ston
{
// Which chain a resolution inserted.
enum class ChainSource
{
  facing,         // adjacent hull, side facing q_i
  complementary,  // adjacent hull, far side
  taut,           // adjacent hull, offsets taken from the taut chain around it
  triangle_hull,  // hull of every triangle obstacle, side facing q_i
  triangle_taut,  // hull of every triangle obstacle, taut-chain offsets
};

struct MultiResolution
{
  std::size_t removed_index = 0;
  Point removed;
  Point q_prev;
  Point q_next;
  std::vector<ObstacleId> triangle_obstacles;
  std::vector<ObstacleId> adjacent;
  std::vector<Point> hull_vertices;  // CCW hull of the adjacent obstacles
  std::vector<Point> inserted;       // in path order
  double delta = 0.0;
  ChainSource chain = ChainSource::facing;
  bool held = false;  // no edit qualified; q_i kept in place
};

// The obstacle at which the shortest path from q_prev to q_next around the
// given triangle obstacles bends, when it bends at exactly one. Every listed
// obstacle then lies in the triangle (q_prev, bend, q_next).
std::optional<ObstacleId> single_bend(Point q_prev, Point q_i, Point q_next, std::span<ObstacleId const> ids,
                                      ObstacleSet const & obstacles);

// Obstacles of the triangle (q_prev, q_i, q_next) on the q_i side of the two
// segments joining the neighbours to the obstacles' centroid.
std::vector<ObstacleId> adjacent_obstacles(Point q_prev, Point q_i, Point q_next,
                                           std::span<ObstacleId const> ids,
                                           ObstacleSet const & obstacles);

// One point per hull vertex at distance |delta| along the outward bisector of
// the wedge bounded by the two extended edges meeting there. Hulls with fewer
// than three vertices have no wedges; use insertion_points for them.
std::vector<Point> wedge_offsets(std::span<Point const> hull, double delta);

// New processor positions replacing q_i, in walk order from q_prev to q_next.
//
// Polygon hulls contribute the wedge offsets of the vertices facing q_i: the
// arc of hull(hull + {q_prev, q_next}) between the two neighbours on q_i's
// side of the chord. A single vertex is offset towards q_i; a segment is
// offset perpendicular to itself on q_i's side, both ends kept.
std::vector<Point> insertion_points(std::span<Point const> hull, Point q_prev, Point q_next, Point q_i,
                                    double delta);

// min(d / 4, 5% of the hull's bounding-box diagonal).
double default_insertion_offset(std::span<Point const> hull, ObstacleSet const & obstacles);

// Replaces processor |i| by processors near the adjacent-partition hull. The
// edit is accepted only if the homotopy class is unchanged and the local
// detour is no longer than the two segments through q_i. The candidates, in
// order, are the chains of ChainSource; all are retried with the offset
// halved, up to six times. When nothing qualifies q_i stays in place and
// |held| is set.
MultiResolution resolve_multi(StringConfig & cfg, std::size_t i, std::span<ObstacleId const> ids,
                              ObstacleSet const & obstacles, double delta = 0.0);
}  // namespace ston
