#include "ston/geometry.hpp"
#include "ston/oracle.hpp"

#include "scenes.hpp"

#include "doctest.h"

#include <algorithm>
#include <stdexcept>

using namespace ston;
using ston::testing::Rng;
using ston::testing::uniform;

namespace
{
bool same_cycle(std::vector<Point> const & a, std::vector<Point> const & b)
{
  if (a.size() != b.size())
    return false;
  if (a.empty())
    return true;
  auto const it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end())
    return false;
  std::vector<Point> rotated(it, b.end());
  rotated.insert(rotated.end(), b.begin(), it);
  return rotated == a;
}

std::vector<Point> random_points(Rng & rng, std::size_t n)
{
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 1.0)});
  return pts;
}
}  // namespace

TEST_SUITE("geometry")
{
  TEST_CASE("orient examples")
  {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
    CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
  }

  TEST_CASE("orient is antisymmetric")
  {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i)
    {
      Point const a{uniform(rng, -5, 5), uniform(rng, -5, 5)};
      Point const b{uniform(rng, -5, 5), uniform(rng, -5, 5)};
      Point const c{uniform(rng, -5, 5), uniform(rng, -5, 5)};
      CHECK(orient(a, b, c) == -orient(a, c, b));
    }
  }

  TEST_CASE("orient tolerance scales with the points")
  {
    double const s = 1e6;
    CHECK(orient({0, 0}, {s, s}, {2 * s, 2 * s}) == 0);
    CHECK(orient({0, 0}, {1e-6, 0}, {0, 1e-6}) == 1);
  }

  TEST_CASE("point_in_triangle examples")
  {
    Triangle const t{{0, 0}, {1, 0}, {0, 1}};
    CHECK(point_in_triangle({0.25, 0.25}, t));
    CHECK_FALSE(point_in_triangle({1, 1}, t));
    CHECK(point_in_triangle({0.5, 0}, t));
    CHECK(point_in_triangle({0, 0}, t));
  }

  TEST_CASE("degenerate triangles contain their segment only")
  {
    Triangle const t{{0, 0}, {1, 0}, {2, 0}};
    CHECK(point_in_triangle({1.5, 0}, t));
    CHECK_FALSE(point_in_triangle({1.5, 0.01}, t));
    CHECK_FALSE(point_in_triangle({2.5, 0}, t));
    Triangle const spike{{0, 0}, {2, 0}, {1, 0}};
    CHECK(point_in_triangle({1.9, 0}, spike));
  }

  TEST_CASE("point_in_triangle agrees with sign consistency")
  {
    Rng rng(12);
    for (int i = 0; i < 2000; ++i)
    {
      Triangle const t{{uniform(rng, 0, 1), uniform(rng, 0, 1)},
                       {uniform(rng, 0, 1), uniform(rng, 0, 1)},
                       {uniform(rng, 0, 1), uniform(rng, 0, 1)}};
      Point const p{uniform(rng, 0, 1), uniform(rng, 0, 1)};
      int const s1 = orient(t.a, t.b, p);
      int const s2 = orient(t.b, t.c, p);
      int const s3 = orient(t.c, t.a, p);
      bool const consistent = (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
      if (orient(t.a, t.b, t.c) != 0)
        CHECK(point_in_triangle(p, t) == consistent);
    }
  }

  TEST_CASE("convex_hull examples")
  {
    std::vector<Point> const square{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}};
    CHECK(convex_hull(square) == std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    std::vector<Point> const tri{{0, 1}, {1, 0}, {0, 0}};
    CHECK(convex_hull(tri) == std::vector<Point>{{0, 0}, {1, 0}, {0, 1}});
    std::vector<Point> const line{{1, 0}, {0, 0}, {2, 0}};
    CHECK(convex_hull(line) == std::vector<Point>{{0, 0}, {2, 0}});
    std::vector<Point> const one{{3, 4}, {3, 4}};
    CHECK(convex_hull(one) == std::vector<Point>{{3, 4}});
    CHECK_THROWS_AS(convex_hull(std::vector<Point>{}), std::invalid_argument);
  }

  TEST_CASE("convex_hull matches gift wrapping and contains its input")
  {
    Rng rng(13);
    for (int i = 0; i < 1000; ++i)
    {
      auto const pts = random_points(rng, ston::testing::uniform_count(rng, 1, 60));
      auto const hull = convex_hull(pts);
      REQUIRE(same_cycle(hull, oracle::hull(pts)));
      if (hull.size() >= 3)
      {
        for (auto const & p : pts)
          REQUIRE(point_in_polygon(p, hull));
      }
    }
  }

  TEST_CASE("centroid examples")
  {
    Point const c = centroid(std::vector<Point>{{1.8, 0.9}, {2.2, 0.9}});
    CHECK(c.x == doctest::Approx(2.0));
    CHECK(c.y == doctest::Approx(0.9));
    CHECK(centroid(std::vector<Point>{{0, 0}, {2, 0}}) == Point{1, 0});
    CHECK(centroid(std::vector<Point>{{0, 0}}) == Point{0, 0});
    CHECK_THROWS_AS(centroid(std::vector<Point>{}), std::invalid_argument);
  }

  TEST_CASE("polyline_length examples")
  {
    CHECK(polyline_length(std::vector<Point>{{0, 0}, {3, 4}}, false) == 5.0);
    CHECK(polyline_length(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}, false) == 2.0);
    CHECK(polyline_length(std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true) == 4.0);
    CHECK_THROWS_AS(polyline_length(std::vector<Point>{{0, 0}}, false), std::invalid_argument);
    CHECK_THROWS_AS(polyline_length(std::vector<Point>{{0, 0}, {1, 0}}, true), std::invalid_argument);
  }

  TEST_CASE("in_adjacent_partition examples")
  {
    Point const qp{0, 0};
    Point const qi{2, 2};
    Point const qn{4, 0};
    Point const c{2, 0.9};
    CHECK(in_adjacent_partition({1.8, 0.9}, qp, qi, qn, c));
    CHECK_FALSE(in_adjacent_partition({2, 0.3}, qp, qi, qn, c));
    CHECK(in_adjacent_partition(c, qp, qi, qn, c));
    CHECK_THROWS_AS(in_adjacent_partition({5, 5}, qp, qi, qn, c), std::invalid_argument);
  }

  TEST_CASE("adjacent partition and the lower triangle cover the processor triangle")
  {
    Rng rng(14);
    for (int i = 0; i < 2000; ++i)
    {
      Point const qp{0, 0};
      Point const qn{4, 0};
      Point const qi{uniform(rng, 0.5, 3.5), uniform(rng, 0.5, 3)};
      Triangle const t{qp, qi, qn};
      double const u = uniform(rng, 0.05, 0.9);
      double const v = uniform(rng, 0.05, 0.9 - u);
      Point const c = qp + u * (qi - qp) + v * (qn - qp);
      double const s = uniform(rng, 0, 1);
      double const r = uniform(rng, 0, 1 - s);
      Point const p = qp + s * (qi - qp) + r * (qn - qp);
      if (!point_in_triangle(p, t))
        continue;
      bool const adjacent = in_adjacent_partition(p, qp, qi, qn, c);
      bool const lower = point_in_triangle(p, {qp, c, qn});
      bool const on_split = orient(qp, c, p) == 0 || orient(c, qn, p) == 0;
      CHECK((adjacent || lower));
      if (!on_split)
        CHECK(adjacent != lower);
      else
        CHECK(adjacent);
    }
  }

  TEST_CASE("segment predicates")
  {
    CHECK(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK(segments_cross_properly({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK(segments_intersect({0, 0}, {1, 0}, {1, 0}, {2, 1}));
    CHECK_FALSE(segments_cross_properly({0, 0}, {1, 0}, {1, 0}, {2, 1}));
    CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
    CHECK(on_segment({0.5, 0.5}, {0, 0}, {1, 1}));
    CHECK_FALSE(on_segment({1.5, 1.5}, {0, 0}, {1, 1}));
  }

  TEST_CASE("distances")
  {
    CHECK(point_segment_distance({1, 1}, {0, 0}, {2, 0}) == 1.0);
    CHECK(point_segment_distance({3, 0}, {0, 0}, {2, 0}) == 1.0);
    std::vector<Point> const square{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    CHECK(point_boundary_distance({1, 0.5}, square) == doctest::Approx(0.5));
    CHECK(point_boundary_distance({3, 1}, square) == doctest::Approx(1.0));
    CHECK(point_in_polygon({1, 1}, square));
    CHECK(point_in_polygon({2, 1}, square));
    CHECK_FALSE(point_in_polygon({3, 1}, square));
  }

  TEST_CASE("bounding boxes")
  {
    Box const b = bounding_box(std::vector<Point>{{1, 2}, {-1, 5}, {0, 0}});
    CHECK(b.min_x == -1);
    CHECK(b.max_y == 5);
    CHECK(b.max_extent() == 5);
    CHECK_THROWS_AS(bounding_box(std::vector<Point>{}), std::invalid_argument);
  }
}
