#pragma once

// Constructive search for ell collinear points or an empty pentagon, walking
// nested convex layers from a k-minimal outer set inwards.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "emptygon/convexity.hpp"
#include "emptygon/geometry.hpp"
#include "emptygon/holes.hpp"

namespace emptygon {

/// ((2l-1)^l - 1) / (2l-2).
BigInt threshold_k(long long ell);

enum class Alignment { double_aligned, left, right, none };

std::string to_string(Alignment a);

/// Oriented edge x -> y between clockwise-consecutive points of layer A_i.
struct Arc {
  Point from;
  Point to;
  int layer = 1;
  /// Open triangle (from, to, apex) misses A_{layer+1}.
  bool empty = false;
  /// Set on followers only.
  std::optional<Alignment> alignment;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Clockwise arcs of A_i, 1 <= i <= ell-1. Needs |A_i| >= 3 and an apex.
std::vector<Arc> arcs_of_layer(const LayerDecomposition& layers, int i);

/// The arc of A_{i+1} whose edge crosses the open triangle (x, y, z) of an
/// empty arc of A_i, i <= ell-2, with its alignment filled in.
Arc follower(const Arc& arc, const LayerDecomposition& layers);

/// double when p is on segment xz and q on yz; left or right when only one
/// holds; none otherwise.
Alignment classify_alignment(const Arc& xy, const Arc& pq, const Point& z);

struct ExtractionParams {
  int ell = 3;
  /// Size of the convex outer set; defaults to threshold_k(ell).
  std::optional<std::size_t> k;
  /// Finish with a complete 5-hole search when the walk yields nothing.
  bool oracle_fallback = true;
  /// Shrink the outer set to a k-minimal one before peeling.
  bool minimize_outer_layer = true;
};

struct TraceStep {
  std::string step;
  std::string detail;
  std::vector<Point> points;
};

struct ExtractionResult {
  enum class Outcome { collinear, hole, absent, inconclusive };

  Outcome outcome = Outcome::inconclusive;
  std::optional<CollinearCertificate> collinear;
  std::optional<HoleCertificate> hole;
  std::vector<TraceStep> trace;
  /// Decomposition in force when the run ended, if one was built.
  std::optional<LayerDecomposition> layers;
  /// Names of the steps that produced or checked something, e.g. "window",
  /// "quadrilateral", "unaligned-follower", "terminal", "restart", "fallback".
  std::set<std::string> paths;
  /// |A_{i-1}| < (2l-1)(|A_i|+1) for all i, evaluated when every layer is
  /// non-empty and every window of a layer covers a point of the next.
  std::optional<bool> consecutive_layers;
  std::size_t k = 0;
  std::size_t restarts = 0;

  [[nodiscard]] bool fired(const std::string& path) const { return paths.count(path) > 0; }
};

std::string to_string(ExtractionResult::Outcome o);

ExtractionResult extract(const PointSet& points, const ExtractionParams& params);

}  // namespace emptygon
