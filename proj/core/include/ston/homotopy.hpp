#pragma once

#include "ston/geometry.hpp"
#include "ston/obstacle_set.hpp"

#include <span>
#include <string>
#include <vector>

namespace ston
{
// One signed pass of the path across the downward vertical ray of an
// obstacle; +1 moving towards increasing x.
struct Crossing
{
  ObstacleId obstacle = 0;
  int sign = 1;

  friend bool operator==(Crossing const &, Crossing const &) = default;
  friend auto operator<=>(Crossing const &, Crossing const &) = default;
};

// Freely reduced crossing word. Two paths with common endpoints are homotopic
// relative to the obstacles iff their signatures are equal.
struct Signature
{
  std::vector<Crossing> word;

  bool empty() const { return word.empty(); }
  friend bool operator==(Signature const &, Signature const &) = default;
};

std::string to_string(Signature const & s);

// Radii for reading a vertex as resting on an obstacle (|touch|) and for
// pushing it off to the outside of its turn (|push|). Scaled by the obstacle
// set's extent, or by the path's when the obstacles have none.
struct ContactTolerance
{
  double touch = 0.0;
  double push = 0.0;
};

ContactTolerance contact_tolerance(ObstacleSet const & obstacles, std::span<Point const> path);

// Push applied to a vertex resting on |p| between neighbours |a| and |b|:
// tol.push, shrunk to a quarter of the nearer neighbour's distance to |p|.
double push_distance(ContactTolerance const & tol, Point p, Point a, Point b);

// Cancels adjacent inverse pairs until none remain.
Signature reduce(std::vector<Crossing> word);

// Crossing word of an open path.
//
// A vertex lying on the x-coordinate of an obstacle counts as lying to its
// right; rays of obstacles sharing an x-coordinate are ordered by id.
//
// An interior vertex within a tiny distance of an obstacle is read as
// touching it from the outside of the turn, i.e. the obstacle sits on the
// concave side of the bend there. Converged strings and via-point paths rest
// on obstacles in exactly this way. Throws PathThroughObstacle when a segment
// runs through an obstacle or a terminal lies on one. A touching vertex that
// does not turn throws as well.
Signature signature(std::span<Point const> path, ObstacleSet const & obstacles);

// Conjugacy-class invariant of a closed loop: the word of the loop cut at a
// non-touching vertex, cyclically reduced and rotated to its lexicographically
// least form.
Signature loop_signature(std::span<Point const> loop, ObstacleSet const & obstacles);

// Throws std::invalid_argument unless both paths share their terminals.
bool homotopic(std::span<Point const> a, std::span<Point const> b, ObstacleSet const & obstacles);

bool freely_homotopic_loops(std::span<Point const> a, std::span<Point const> b,
                            ObstacleSet const & obstacles);
}  // namespace ston
