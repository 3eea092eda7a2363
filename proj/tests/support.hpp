#pragma once

// Small brute-force helpers shared by the unit tests. They use nothing from
// the library except Point, PointSet and cross(), so they can serve as
// independent checks.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "emptygon/geometry.hpp"

namespace testing {

using emptygon::Point;
using emptygon::PointSet;

inline PointSet grid_points(int m) {
  std::vector<Point> pts;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) pts.push_back({x, y});
  return PointSet(pts);
}

inline PointSet square_plus_center() { return PointSet{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}}; }

// Calls f(i, j, k) for every index triple i < j < k.
inline void for_each_triple(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& f) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) f(i, j, k);
}

inline int sign_of(const Point& a, const Point& b, const Point& c) {
  const auto d = emptygon::cross(a, b, c);
  return (d > 0) - (d < 0);
}

// Points on the line through two points, counted pairwise.
inline std::size_t brute_max_collinear(const std::vector<Point>& pts) {
  if (pts.size() < 3) return pts.size();
  std::size_t best = 2;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      std::size_t c = 0;
      for (const auto& p : pts)
        if (sign_of(pts[i], pts[j], p) == 0) ++c;
      if (c > best) best = c;
    }
  return best;
}

// p is strictly inside triangle abc or on its boundary; abc non-degenerate.
inline bool brute_in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  const int s1 = sign_of(a, b, p), s2 = sign_of(b, c, p), s3 = sign_of(c, a, p);
  return !((s1 < 0 || s2 < 0 || s3 < 0) && (s1 > 0 || s2 > 0 || s3 > 0));
}

// Every point is a corner: none lies on a segment between two others or in
// a non-degenerate triangle of three others.
inline bool brute_strictly_convex(const std::vector<Point>& s) {
  const std::size_t n = s.size();
  if (n <= 2) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (i == j || i == k) continue;
        if (sign_of(s[j], s[k], s[i]) == 0) {
          // collinear triple; i between j and k kills strictness
          const auto lo_x = std::min(s[j].x, s[k].x), hi_x = std::max(s[j].x, s[k].x);
          const auto lo_y = std::min(s[j].y, s[k].y), hi_y = std::max(s[j].y, s[k].y);
          if (s[i].x >= lo_x && s[i].x <= hi_x && s[i].y >= lo_y && s[i].y <= hi_y) return false;
        }
        for (std::size_t l = k + 1; l < n; ++l) {
          if (l == i || sign_of(s[j], s[k], s[l]) == 0) continue;
          if (brute_in_closed_triangle(s[i], s[j], s[k], s[l])) return false;
        }
      }
  return true;
}

// Subsets of {0..n-1} of size r in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return;
  while (true) {
    f(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<Point> pick(const PointSet& p, const std::vector<std::size_t>& idx) {
  std::vector<Point> out;
  for (auto i : idx) out.push_back(p[i]);
  return out;
}

}  // namespace testing
