#pragma once

#include "ston/geometry.hpp"
#include "ston/obstacle_set.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ston
{
// d: the minimum distance between two distinct obstacles.
std::optional<double> min_obstacle_distance(ObstacleSet const & obstacles);

// Splits every segment into ceil(len / h) equal pieces. Input vertices and
// endpoints are kept, so the output traces the same curve.
std::vector<Point> resample(std::span<Point const> polyline, double h);

// Same as resample() for a closed loop; the wrap segment is subdivided too and
// the first vertex is not repeated at the end.
std::vector<Point> resample_closed(std::span<Point const> loop, double h);

// |count| points spaced evenly by arc length along the polyline, endpoints
// included. Input vertices are not kept.
std::vector<Point> resample_count(std::span<Point const> polyline, std::size_t count);

// Spacing that satisfies the one-obstacle-per-triangle condition: d / 2, or
// 1% of the scene diagonal when d is undefined.
double safe_spacing(ObstacleSet const & obstacles, std::span<Point const> path);
}  // namespace ston
