#pragma once

#include "ston/geometry.hpp"
#include "ston/homotopy.hpp"
#include "ston/obstacle_set.hpp"

#include <span>
#include <vector>

// Brute-force references for small instances.
namespace ston::oracle
{
enum class SearchStatus
{
  found,
  depth_exceeded,
};

struct ShortestPath
{
  SearchStatus status = SearchStatus::depth_exceeded;
  std::vector<Point> path;  // terminals and via obstacles
  std::vector<ObstacleId> via;
  double length = 0.0;
};

// Minimum-length polyline homotopic to |path| whose interior vertices are
// obstacles, over every via sequence of at most |max_via| obstacles without
// immediate repeats.
ShortestPath shortest_homotopic(std::span<Point const> path, ObstacleSet const & obstacles,
                                std::size_t max_via);

// Jarvis march, CCW from the leftmost-then-lowest point, collinear points
// dropped. Throws std::invalid_argument on empty input.
std::vector<Point> hull(std::span<Point const> points);

// Ascending ids of every obstacle in the closed triangle.
std::vector<ObstacleId> query_triangle(ObstacleSet const & obstacles, Triangle const & t);
}  // namespace ston::oracle
