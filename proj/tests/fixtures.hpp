#pragma once

// Point sets that steer the extractor down specific proof paths.

#include <cmath>
#include <vector>

#include "emptygon/geometry.hpp"

namespace fixtures {

using emptygon::Point;
using emptygon::PointSet;

// ell = 3: the follower of an empty arc is aligned with neither side.
inline PointSet unaligned_follower() {
  return PointSet{{0, 6}, {1, 1}, {2, 0}, {2, 10}, {3, 1}, {3, 7},
                  {4, 3}, {6, 9}, {8, 4}, {8, 8}, {9, 0}, {9, 4}};
}

// ell = 3: the follower arc is not empty, so a layer-3 point closes a pentagon.
inline PointSet nonempty_follower() {
  return PointSet{{2, 9}, {3, 4}, {4, 11}, {5, 8},  {6, 12}, {7, 0},  {7, 7},
                  {8, 6}, {8, 8}, {9, 4},  {10, 9}, {10, 12}, {12, 6}, {13, 7}};
}

// ell = 4 without minimising the outer layer: layers 9 5 3 1, the follower
// chain turns left then right.
inline PointSet terminal() {
  return PointSet{{-9, -9}, {-9, 0}, {-5, -2}, {-5, 1}, {-4, 8}, {-3, 0}, {-2, -2},
                  {-2, 2},  {-2, 4}, {-1, -10}, {-1, 5}, {0, 0}, {1, 3},  {2, 3},
                  {4, 6},   {4, 8},  {5, 7},   {8, 9},  {9, 3}, {10, 5}};
}

// ell = 3, k = 7, no minimisation: two rotated heptagons and a centre
// point, so no arc of the outer heptagon is empty.
inline PointSet restart() {
  std::vector<Point> pts;
  const double tau = 2 * std::acos(-1.0);
  for (int j = 0; j < 7; ++j) {
    const double a = tau * j / 7 + 0.05, b = tau * (j + 0.5) / 7 + 0.05;
    pts.push_back({std::llround(100 * std::cos(a)), std::llround(100 * std::sin(a))});
    pts.push_back({std::llround(30 * std::cos(b)), std::llround(30 * std::sin(b))});
  }
  pts.push_back({1, 2});
  return PointSet(pts);
}

}  // namespace fixtures
