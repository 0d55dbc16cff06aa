#include "ston/obstacle_set.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ston
{
namespace
{
constexpr std::size_t kLeafSize = 8;

bool less_xy(Point const & a, Point const & b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

bool overlaps(Box const & a, Box const & b)
{
  return a.min_x <= b.max_x && b.min_x <= a.max_x && a.min_y <= b.max_y && b.min_y <= a.max_y;
}
}  // namespace

std::optional<double> min_pairwise_distance(std::span<Point const> points)
{
  if (points.size() < 2)
    return std::nullopt;
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), less_xy);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
  {
    for (std::size_t j = i + 1; j < pts.size() && pts[j].x - pts[i].x < best; ++j)
      best = std::min(best, distance(pts[i], pts[j]));
  }
  return best;
}

ObstacleSet::ObstacleSet(std::span<Point const> points)
{
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return less_xy(points[a], points[b]); });
  std::vector<bool> keep(points.size(), true);
  for (std::size_t i = 1; i < idx.size(); ++i)
  {
    if (points[idx[i]] == points[idx[i - 1]])
    {
      keep[idx[i]] = false;
      ++m_duplicates;
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i)
  {
    if (!is_finite(points[i]))
      throw std::invalid_argument("ObstacleSet: non-finite obstacle coordinate");
    if (keep[i])
      m_points.push_back(points[i]);
  }

  m_min_dist = min_pairwise_distance(m_points);
  if (!m_points.empty())
    m_bounds = bounding_box(m_points);

  m_by_x.resize(m_points.size());
  std::iota(m_by_x.begin(), m_by_x.end(), 0);
  std::sort(m_by_x.begin(), m_by_x.end(), [&](ObstacleId a, ObstacleId b) {
    return m_points[a].x < m_points[b].x || (m_points[a].x == m_points[b].x && a < b);
  });

  m_order.resize(m_points.size());
  std::iota(m_order.begin(), m_order.end(), 0);
  if (!m_points.empty())
  {
    m_nodes.reserve(2 * m_points.size() / kLeafSize + 2);
    build_node(0, m_points.size());
  }
}

std::size_t ObstacleSet::build_node(std::size_t begin, std::size_t end)
{
  std::size_t const id = m_nodes.size();
  m_nodes.push_back({});

  Box box{m_points[m_order[begin]].x, m_points[m_order[begin]].y, m_points[m_order[begin]].x,
          m_points[m_order[begin]].y};
  for (std::size_t i = begin + 1; i < end; ++i)
  {
    Point const & p = m_points[m_order[i]];
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }

  Node node;
  node.box = box;
  node.begin = begin;
  node.end = end;
  if (end - begin > kLeafSize)
  {
    bool const split_x = box.width() >= box.height();
    std::size_t const mid = begin + (end - begin) / 2;
    std::nth_element(m_order.begin() + static_cast<std::ptrdiff_t>(begin),
                     m_order.begin() + static_cast<std::ptrdiff_t>(mid),
                     m_order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](ObstacleId a, ObstacleId b) {
                       Point const & pa = m_points[a];
                       Point const & pb = m_points[b];
                       return split_x ? (pa.x < pb.x || (pa.x == pb.x && a < b))
                                      : (pa.y < pb.y || (pa.y == pb.y && a < b));
                     });
    node.leaf = false;
    node.left = build_node(begin, mid);
    node.right = build_node(mid, end);
  }
  m_nodes[id] = node;
  return id;
}

template <typename Pred>
void ObstacleSet::collect(Box const & box, Pred && accept, std::vector<ObstacleId> & out) const
{
  if (m_nodes.empty())
    return;
  std::vector<std::size_t> stack{0};
  while (!stack.empty())
  {
    Node const & node = m_nodes[stack.back()];
    stack.pop_back();
    if (!overlaps(node.box, box))
      continue;
    if (node.leaf)
    {
      for (std::size_t i = node.begin; i < node.end; ++i)
      {
        ObstacleId const id = m_order[i];
        if (box.contains(m_points[id]) && accept(m_points[id]))
          out.push_back(id);
      }
      continue;
    }
    stack.push_back(node.right);
    stack.push_back(node.left);
  }
  std::sort(out.begin(), out.end());
}

std::vector<ObstacleId> ObstacleSet::query_triangle(Triangle const & t) const
{
  std::vector<ObstacleId> out;
  Box box = bounding_box(t);
  // Boundary points within the collinearity slack must survive the box stage.
  double const pad = 1e-9 * std::max(box.max_extent(), 1e-300);
  box.min_x -= pad;
  box.min_y -= pad;
  box.max_x += pad;
  box.max_y += pad;
  collect(box, [&](Point const & p) { return point_in_triangle(p, t); }, out);
  return out;
}

std::vector<ObstacleId> ObstacleSet::query_box(Box const & box) const
{
  std::vector<ObstacleId> out;
  collect(box, [](Point const &) { return true; }, out);
  return out;
}
}  // namespace ston
