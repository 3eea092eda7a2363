#pragma once

// Exact planar predicates over integer points.
//
// Coordinates are stored as 64-bit integers bounded by kMaxCoordinate so that
// every determinant used here fits in a 128-bit intermediate without rounding.
// Inputs outside that range are rejected when a PointSet is built.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace emptygon {

using Coord = std::int64_t;
using Wide = __int128;

inline constexpr Coord kMaxCoordinate = Coord{1} << 60;

/// Raised when an operation is called outside its precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

enum class Orientation : int { negative = -1, zero = 0, positive = 1 };

constexpr Orientation operator-(Orientation o) {
  return static_cast<Orientation>(-static_cast<int>(o));
}

std::string to_string(Orientation o);

/// Twice the signed area of triangle abc (positive for a left turn).
inline Wide cross(const Point& a, const Point& b, const Point& c) {
  return Wide(b.x - a.x) * Wide(c.y - a.y) - Wide(b.y - a.y) * Wide(c.x - a.x);
}

/// Sign of cross(a, b, c) as -1, 0 or 1. No distinctness check.
inline int orient(const Point& a, const Point& b, const Point& c) {
  const Wide d = cross(a, b, c);
  return (d > 0) - (d < 0);
}

/// Orientation of the ordered triple; throws DomainError on repeated points.
Orientation orientation(const Point& a, const Point& b, const Point& c);

/// p lies on the closed segment vw. Throws DomainError when v == w.
bool on_closed_segment(const Point& p, const Point& v, const Point& w);

/// Closed triangle membership. Collinear triangles degrade to their covering
/// segment; a, b, c all equal is rejected.
bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c);

/// Open triangle membership; always false for collinear a, b, c.
bool in_open_triangle(const Point& p, const Point& a, const Point& b, const Point& c);

/// The closed segment pq meets the open triangle abc.
bool segment_meets_open_triangle(const Point& p, const Point& q, const Point& a,
                                 const Point& b, const Point& c);

/// Segments ab and cd cross at a single point interior to both.
bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);

/// Twice the signed area of a polygon given in order (shoelace, no division).
Wide twice_area(std::span<const Point> polygon);

/// Finite set of distinct points kept in canonical (x, y) order.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);
  PointSet(std::initializer_list<Point> points);

  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }
  [[nodiscard]] const Point& operator[](std::size_t i) const { return points_[i]; }
  [[nodiscard]] auto begin() const { return points_.begin(); }
  [[nodiscard]] auto end() const { return points_.end(); }
  [[nodiscard]] std::span<const Point> points() const { return points_; }
  [[nodiscard]] const std::vector<Point>& vector() const { return points_; }

  [[nodiscard]] bool contains(const Point& p) const;
  /// Canonical index of p, or size() when absent.
  [[nodiscard]] std::size_t index_of(const Point& p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

/// Canonically sorted, deduplicated copy.
std::vector<Point> canonical(std::span<const Point> points);

struct CollinearWitness {
  std::size_t count = 0;
  std::vector<Point> points;  // ordered along the line
};

/// Largest collinear subset. Ties go to the lexicographically least list.
CollinearWitness max_collinear(std::span<const Point> points);
inline CollinearWitness max_collinear(const PointSet& points) {
  return max_collinear(points.points());
}

/// True when no three points are collinear.
bool in_general_position(std::span<const Point> points);

/// General-position perturbation preserving every nonzero orientation.
///
/// The i-th point (canonical order) maps to (M x + i, M y + i^2). M starts
/// above |P| so canonical order is preserved, and is squared until both
/// postconditions hold on every triple.
PointSet perturb_general_position(const PointSet& points);

}  // namespace emptygon
