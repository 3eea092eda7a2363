#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "emptygon/geometry.hpp"

namespace emptygon {

using BigInt = boost::multiprecision::cpp_int;

/// Hull boundary in clockwise order, starting at the canonically least
/// boundary point. `boundary` keeps collinear non-corner points; `corners`
/// is the subsequence of extreme points. A collinear input lists its points
/// in canonical order with the two endpoints as corners.
struct HullBoundary {
  std::vector<Point> boundary;
  std::vector<Point> corners;

  [[nodiscard]] bool is_corner(const Point& p) const;
  [[nodiscard]] bool on_boundary(const Point& p) const;
};

HullBoundary convex_hull(std::span<const Point> points);
inline HullBoundary convex_hull(const PointSet& p) { return convex_hull(p.points()); }

/// Closed convex hull of a finite point set, queried for membership.
class ConvexRegion {
 public:
  explicit ConvexRegion(std::span<const Point> points);

  [[nodiscard]] bool contains(const Point& p) const;           // closed
  [[nodiscard]] bool contains_interior(const Point& p) const;  // open; empty if degenerate
  [[nodiscard]] const std::vector<Point>& corners() const { return corners_; }
  /// Twice the area; zero for degenerate hulls.
  [[nodiscard]] Wide twice_area() const;

 private:
  std::vector<Point> corners_;  // clockwise
};

/// Points of `universe` that lie in the closed hull of `region`.
std::vector<Point> points_in_hull(std::span<const Point> universe, std::span<const Point> region);

/// All points of `universe` on the boundary of conv(subset).
std::vector<Point> hull_closure(std::span<const Point> universe, std::span<const Point> subset);

bool is_convex_position(std::span<const Point> points);
bool is_strictly_convex_position(std::span<const Point> points);

/// q(k, l): forcing size for l collinear or k strictly convex points among
/// point sets in convex position.
long long q_formula(long long k, long long ell);

/// k points of P in strictly convex position, selected by case analysis on
/// the hull sides. Requires P in convex position, no `ell` collinear points
/// and |P| >= q_formula(k, ell).
std::vector<Point> strictly_convex_subset_in_convex_position(std::span<const Point> points,
                                                             long long k, long long ell);

/// Maximum-cardinality subset in convex position (collinear boundary points
/// allowed). Result is canonical-ordered.
std::vector<Point> max_convex_position_subset(std::span<const Point> points);
/// Maximum-cardinality subset in strictly convex position.
std::vector<Point> max_strictly_convex_subset(std::span<const Point> points);

/// X subset of P, |X| >= k, in convex position, closed under boundary
/// points, with no >=k convex-position Y whose hull is strictly inside
/// conv(X). Descends from `start` when given (it must be a >=k
/// convex-position subset of P), else from a maximum convex subset.
std::vector<Point> k_minimal_convex_subset(const PointSet& points, std::size_t k,
                                           std::optional<std::vector<Point>> start = {});

/// A_1 ... A_ell and the apex z. Layers 1..ell-1 are stored clockwise
/// (hull order), the residue A_ell canonically.
struct LayerDecomposition {
  std::vector<std::vector<Point>> layers;
  std::optional<Point> apex;
  int ell = 2;

  /// 1-based layer access, matching A_1 ... A_ell.
  [[nodiscard]] const std::vector<Point>& layer(int i) const { return layers.at(i - 1); }
  [[nodiscard]] std::vector<std::size_t> sizes() const;
};

/// Layers nested under the given outer layer A_1 (used as-is).
LayerDecomposition layers_from_outer(const PointSet& points, std::span<const Point> outer, int ell);

/// Layers with A_1 = k_minimal_convex_subset(P, k).
LayerDecomposition convex_layers(const PointSet& points, int ell, std::size_t k);

/// Plain onion peeling of the whole set: boundary sets from the outside in.
std::vector<std::vector<Point>> onion_layers(std::span<const Point> points);

/// Greedy maximal subset in general position, canonical scan order.
std::vector<Point> max_general_position_subset(std::span<const Point> points);

/// binom(2k-5, k-2) + 1, the best known upper bound on ES(k).
BigInt es_bound(long long k);

struct EsKlBound {
  BigInt value;
  BigInt convex_to_strict;  // via a large convex subset, then q(k, l)
  BigInt general_position;  // via a large general-position subset
  /// "convex-to-strict" or "general-position"; ties go to convex-to-strict.
  std::string winner;
};

EsKlBound es_kl_bound(long long k, long long ell);

BigInt binomial(long long n, long long r);

}  // namespace emptygon
