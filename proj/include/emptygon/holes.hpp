#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "emptygon/geometry.hpp"

namespace emptygon {

/// k points in strictly convex position whose closed hull meets the ambient
/// set only in those points. Built through make(), which verifies.
class HoleCertificate {
 public:
  /// Throws DomainError naming the first violated condition.
  static HoleCertificate make(const PointSet& ambient, std::span<const Point> vertices);

  /// Clockwise, starting at the canonically least vertex.
  [[nodiscard]] const std::vector<Point>& vertices() const { return vertices_; }
  [[nodiscard]] std::size_t k() const { return vertices_.size(); }
  [[nodiscard]] Wide twice_area() const;

  friend bool operator==(const HoleCertificate&, const HoleCertificate&) = default;

 private:
  std::vector<Point> vertices_;
};

/// ell points of the ambient set on one line, ordered along it.
class CollinearCertificate {
 public:
  static CollinearCertificate make(const PointSet& ambient, std::span<const Point> points);

  [[nodiscard]] const std::vector<Point>& points() const { return points_; }
  [[nodiscard]] std::size_t ell() const { return points_.size(); }

 private:
  std::vector<Point> points_;
};

/// Empty string when X is a hole of P, else the first violated condition
/// ("point not in set", "fewer than 3 points", "not strictly convex",
/// "hull not empty").
std::string hole_violation(const PointSet& points, std::span<const Point> subset);
std::string collinear_violation(const PointSet& points, std::span<const Point> subset);

/// X is a |X|-hole of P. Throws DomainError when X is not a subset of P or
/// has fewer than three points.
bool is_hole(const PointSet& points, std::span<const Point> subset);

/// Visits every k-hole of P whose vertices are drawn from `candidates`
/// (defaults to all of P). Vertices arrive counterclockwise from the
/// canonically least one; return true from the visitor to stop.
void for_each_k_hole(const PointSet& points, std::size_t k,
                     const std::function<bool(const std::vector<Point>&)>& visit,
                     std::optional<std::span<const Point>> candidates = {});

/// First k-hole in canonical search order, or nothing. Complete for any size.
std::optional<HoleCertificate> find_k_hole(const PointSet& points, std::size_t k);

/// Largest k <= max_k for which P has a k-hole (0 when none, k >= 3).
std::size_t largest_hole_size(const PointSet& points, std::size_t max_k);

class VisibilityGraph {
 public:
  explicit VisibilityGraph(const PointSet& points);

  [[nodiscard]] const PointSet& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const { return adj_[i][j]; }
  [[nodiscard]] bool adjacent(const Point& p, const Point& q) const;
  [[nodiscard]] bool is_clique(std::span<const Point> subset) const;
  /// No two edges without a shared endpoint cross.
  [[nodiscard]] bool crossing_free() const;

 private:
  PointSet vertices_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

VisibilityGraph visibility_graph(const PointSet& points);

/// Minimum-area 5-hole of P lying inside conv(H). Ties go to the
/// lexicographically least clockwise vertex list.
HoleCertificate min_area_five_hole(const PointSet& points, const HoleCertificate& hole);

struct VisibleClique {
  std::vector<Point> points;  // pairwise visible, clockwise
};
struct Inconclusive {
  std::string reason;
};
using CliqueResult = std::variant<VisibleClique, CollinearCertificate, Inconclusive>;

/// ell collinear points, else five pairwise visible corners of a
/// minimum-area 5-hole, else Inconclusive.
CliqueResult find_visible_5_clique(const PointSet& points, std::size_t ell);

enum class NoFourHoleTag { all_but_one_collinear, two_apex_line, six_point_exceptional, has_four_hole };

std::string to_string(NoFourHoleTag tag);

struct NoFourHoleFamily {
  NoFourHoleTag tag = NoFourHoleTag::has_four_hole;
  /// has_four_hole: the 4-hole. all_but_one_collinear: the line, then the
  /// apex if any. two_apex_line: v, w, then the points on L. exceptional:
  /// the six points.
  std::vector<Point> witness;
  bool visibility_crossing_free = false;
  bool matches_family = false;  // one of the three no-4-hole shapes
};

/// Classifies P against the no-4-hole characterization and checks on the
/// instance that (no 4-hole) <=> (crossing-free visibility) <=> (family
/// match); throws std::logic_error if they disagree.
NoFourHoleFamily classify_no_four_hole(const PointSet& points);

/// The exceptional six-point configuration with no 4-hole, as integers.
const PointSet& exceptional_six_point_fixture();

/// Same order type as `reference` up to relabeling and reflection.
bool same_order_type(std::span<const Point> a, std::span<const Point> reference);

}  // namespace emptygon
