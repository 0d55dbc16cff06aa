#pragma once

#include "ston/geometry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ston
{
using ObstacleId = std::size_t;

// Immutable set of distinct point obstacles with a static 2-d tree over them.
// Ids are positions in points(); duplicates are merged at construction, the
// first occurrence keeping its place.
class ObstacleSet
{
public:
  ObstacleSet() = default;
  explicit ObstacleSet(std::span<Point const> points);

  std::span<Point const> points() const { return m_points; }
  Point const & operator[](ObstacleId id) const { return m_points[id]; }
  std::size_t size() const { return m_points.size(); }
  bool empty() const { return m_points.empty(); }

  // Number of input points dropped as exact duplicates.
  std::size_t duplicates_removed() const { return m_duplicates; }

  // Minimum pairwise distance; absent with fewer than two obstacles.
  std::optional<double> min_distance() const { return m_min_dist; }

  std::optional<Box> bounds() const { return m_bounds; }

  // Ids of obstacles inside the closed triangle, ascending.
  std::vector<ObstacleId> query_triangle(Triangle const & t) const;

  // Ids of obstacles inside the closed box, ascending.
  std::vector<ObstacleId> query_box(Box const & box) const;

  // Ids sorted by (x, id); used for ray-crossing sweeps.
  std::span<ObstacleId const> by_x() const { return m_by_x; }

private:
  struct Node
  {
    Box box;
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t left = 0;
    std::size_t right = 0;
    bool leaf = true;
  };

  std::size_t build_node(std::size_t begin, std::size_t end);

  template <typename Pred>
  void collect(Box const & box, Pred && accept, std::vector<ObstacleId> & out) const;

  std::vector<Point> m_points;
  std::vector<ObstacleId> m_order;  // tree leaf order
  std::vector<Node> m_nodes;
  std::vector<ObstacleId> m_by_x;
  std::optional<double> m_min_dist;
  std::optional<Box> m_bounds;
  std::size_t m_duplicates = 0;
};

// Minimum pairwise distance by a sweep over x-sorted points.
std::optional<double> min_pairwise_distance(std::span<Point const> points);
}  // namespace ston
