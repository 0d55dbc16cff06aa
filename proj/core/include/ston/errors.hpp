#pragma once

#include <stdexcept>
#include <string>

namespace ston
{
// A path segment runs through an obstacle, or a vertex sits on an obstacle in
// a way that leaves its side ambiguous.
class PathThroughObstacle : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// A structural edit or a sweep changed the homotopy class of the string.
class HomotopyViolation : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent scene input.
class SceneError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};
}  // namespace ston
