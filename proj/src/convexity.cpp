#include "emptygon/convexity.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace emptygon {

namespace {

Wide dist2(const Point& a, const Point& b) {
  const Wide dx = Wide(b.x) - a.x;
  const Wide dy = Wide(b.y) - a.y;
  return dx * dx + dy * dy;
}

bool strictly_between(const Point& p, const Point& v, const Point& w) {
  return p != v && p != w && cross(v, w, p) == 0 && std::min(v.x, w.x) <= p.x &&
         p.x <= std::max(v.x, w.x) && std::min(v.y, w.y) <= p.y && p.y <= std::max(v.y, w.y);
}

// Corners of the hull in counterclockwise order from the least point.
std::vector<Point> ccw_corners(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::vector<Point> without(std::span<const Point> pts, std::span<const Point> removed) {
  std::vector<Point> out;
  for (const Point& p : pts) {
    if (std::find(removed.begin(), removed.end(), p) == removed.end()) out.push_back(p);
  }
  return out;
}

// Longest convex chain search. Chains are anchored at their canonically least
// corner; the other corners are visited in strictly increasing angle around
// the anchor with strict left turns. In the non-strict variant every edge also
// collects the points lying inside it, which is exactly the set of extra
// boundary points a convex-position subset may carry.
struct ChainDp {
  const std::vector<Point>& pts;
  bool strict;
  std::vector<std::vector<int>> inner;  // points strictly inside segment (i, j)

  ChainDp(const std::vector<Point>& p, bool s) : pts(p), strict(s) {
    const std::size_t n = pts.size();
    inner.assign(n, std::vector<int>(n, 0));
    if (strict) return;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        int c = 0;
        for (std::size_t w = i + 1; w < j; ++w) {
          // Points between two others on a segment lie between them in
          // canonical order as well.
          if (strictly_between(pts[w], pts[i], pts[j])) ++c;
        }
        inner[i][j] = inner[j][i] = c;
      }
  }

  std::vector<Point> edge_points(std::size_t u, std::size_t v) const {
    std::vector<Point> out;
    if (strict || inner[u][v] == 0) return out;
    for (const Point& w : pts)
      if (strictly_between(w, pts[u], pts[v])) out.push_back(w);
    return out;
  }

  std::vector<Point> solve() const {
    const std::size_t n = pts.size();
    std::size_t best_size = 0;
    std::vector<Point> best;

    for (std::size_t a = 0; a + 2 < n; ++a) {
      const Point& anchor = pts[a];
      std::vector<std::size_t> cand;
      for (std::size_t j = a + 1; j < n; ++j) cand.push_back(j);
      std::sort(cand.begin(), cand.end(), [&](std::size_t u, std::size_t v) {
        const int o = orient(anchor, pts[u], pts[v]);
        if (o != 0) return o > 0;
        return dist2(anchor, pts[u]) < dist2(anchor, pts[v]);
      });
      const std::size_t m = cand.size();
      std::vector<int> ray(m, 0);
      for (std::size_t i = 1; i < m; ++i) {
        ray[i] = ray[i - 1] + (orient(anchor, pts[cand[i - 1]], pts[cand[i]]) != 0 ? 1 : 0);
      }
      // Row 0 is the anchor, row r > 0 is cand[r - 1].
      const auto id = [&](std::size_t row) { return row == 0 ? a : cand[row - 1]; };
      std::vector<std::vector<int>> dp(m + 1, std::vector<int>(m, -1));
      std::vector<std::vector<int>> pred(m + 1, std::vector<int>(m, -1));
      for (std::size_t v = 0; v < m; ++v) dp[0][v] = 2 + inner[a][cand[v]];

      int local_best = 0;
      std::size_t close_u = 0, close_v = 0;
      for (std::size_t v = 0; v < m; ++v) {
        const std::size_t vid = cand[v];
        for (std::size_t row = 0; row <= v; ++row) {
          if (row > 0 && ray[row - 1] >= ray[v]) continue;
          const int cur = dp[row][v];
          if (cur < 0) continue;
          const Point& up = pts[id(row)];
          if (row > 0 && orient(up, pts[vid], anchor) > 0) {
            const int total = cur + inner[vid][a];
            if (total > local_best) {
              local_best = total;
              close_u = row;
              close_v = v;
            }
          }
          for (std::size_t w = v + 1; w < m; ++w) {
            if (ray[w] == ray[v]) continue;
            if (orient(up, pts[vid], pts[cand[w]]) <= 0) continue;
            const int val = cur + 1 + inner[vid][cand[w]];
            if (val > dp[v + 1][w]) {
              dp[v + 1][w] = val;
              pred[v + 1][w] = static_cast<int>(row);
            }
          }
        }
      }
      if (local_best <= 0 || static_cast<std::size_t>(local_best) <= best_size) continue;

      // Walk predecessors back to the anchor.
      std::vector<std::size_t> corners{cand[close_v]};
      std::size_t row = close_u, col = close_v;
      while (row != 0) {
        corners.push_back(cand[row - 1]);
        const int p = pred[row][col];
        col = row - 1;
        row = static_cast<std::size_t>(p);
      }
      corners.push_back(a);
      std::reverse(corners.begin(), corners.end());
      std::vector<Point> witness;
      for (std::size_t i = 0; i < corners.size(); ++i) {
        witness.push_back(pts[corners[i]]);
        const auto extra = edge_points(corners[i], corners[(i + 1) % corners.size()]);
        witness.insert(witness.end(), extra.begin(), extra.end());
      }
      std::sort(witness.begin(), witness.end());
      assert(witness.size() == static_cast<std::size_t>(local_best));
      best_size = witness.size();
      best = std::move(witness);
    }
    return best;
  }
};

}  // namespace

bool HullBoundary::is_corner(const Point& p) const {
  return std::find(corners.begin(), corners.end(), p) != corners.end();
}

bool HullBoundary::on_boundary(const Point& p) const {
  return std::find(boundary.begin(), boundary.end(), p) != boundary.end();
}

HullBoundary convex_hull(std::span<const Point> input) {
  const std::vector<Point> pts = canonical(input);
  if (pts.empty()) throw DomainError("convex hull of an empty set");
  const std::vector<Point> ccw = ccw_corners(pts);
  if (ccw.size() <= 2) {
    // Collinear (or single point): every point is on the boundary.
    HullBoundary h{pts, {pts.front()}};
    if (pts.size() > 1) h.corners.push_back(pts.back());
    return h;
  }
  HullBoundary h;
  h.corners.push_back(ccw[0]);
  for (std::size_t i = ccw.size() - 1; i >= 1; --i) h.corners.push_back(ccw[i]);
  const std::size_t m = h.corners.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point& c = h.corners[i];
    const Point& d = h.corners[(i + 1) % m];
    h.boundary.push_back(c);
    std::vector<Point> between;
    for (const Point& p : pts)
      if (strictly_between(p, c, d)) between.push_back(p);
    std::sort(between.begin(), between.end(),
              [&](const Point& u, const Point& v) { return dist2(c, u) < dist2(c, v); });
    h.boundary.insert(h.boundary.end(), between.begin(), between.end());
  }
  return h;
}

ConvexRegion::ConvexRegion(std::span<const Point> points) {
  if (points.empty()) return;
  corners_ = convex_hull(points).corners;
}

bool ConvexRegion::contains(const Point& p) const {
  const std::size_t m = corners_.size();
  if (m == 0) return false;
  if (m == 1) return p == corners_[0];
  if (m == 2) {
    return cross(corners_[0], corners_[1], p) == 0 &&
           (p == corners_[0] || p == corners_[1] || strictly_between(p, corners_[0], corners_[1]));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (orient(corners_[i], corners_[(i + 1) % m], p) > 0) return false;
  }
  return true;
}

bool ConvexRegion::contains_interior(const Point& p) const {
  const std::size_t m = corners_.size();
  if (m < 3) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (orient(corners_[i], corners_[(i + 1) % m], p) >= 0) return false;
  }
  return true;
}

Wide ConvexRegion::twice_area() const {
  if (corners_.size() < 3) return 0;
  return -emptygon::twice_area(corners_);
}

std::vector<Point> points_in_hull(std::span<const Point> universe, std::span<const Point> region) {
  std::vector<Point> out;
  if (region.empty()) return out;
  const ConvexRegion r(region);
  for (const Point& p : universe)
    if (r.contains(p)) out.push_back(p);
  return out;
}

std::vector<Point> hull_closure(std::span<const Point> universe, std::span<const Point> subset) {
  std::vector<Point> out;
  if (subset.empty()) return out;
  const ConvexRegion r(subset);
  for (const Point& p : universe)
    if (r.contains(p) && !r.contains_interior(p)) out.push_back(p);
  return out;
}

bool is_convex_position(std::span<const Point> points) {
  if (points.empty()) return true;
  return convex_hull(points).boundary.size() == canonical(points).size();
}

bool is_strictly_convex_position(std::span<const Point> points) {
  if (points.empty()) return true;
  return convex_hull(points).corners.size() == canonical(points).size();
}

long long q_formula(long long k, long long ell) {
  if (k < 1 || ell < 1) throw DomainError("q_formula needs k >= 1 and ell >= 1");
  if (k <= 2 || ell <= 2) return std::min(k, ell);
  if (k == 3) return ell;
  if (ell == 3) return k;
  if (k % 2 == 1) return (ell - 1) * (k - 1) / 2 + 1;
  return (ell - 1) * (k - 2) / 2 + 2;
}

namespace {

// Case analysis on the hull sides P_i = P ∩ [v_i, v_{i+1}].
std::vector<Point> select_strict(const std::vector<Point>& pts, long long k, long long ell) {
  if (k <= 0) return {};
  if (k <= 2) return {pts.begin(), pts.begin() + k};
  const HullBoundary hull = convex_hull(pts);
  if (k == 3) return {hull.corners.begin(), hull.corners.begin() + 3};
  if (ell == 3) {
    // No three collinear: convex position is already strict.
    return {hull.boundary.begin(), hull.boundary.begin() + k};
  }

  const auto& b = hull.boundary;
  const std::size_t n = b.size();
  std::vector<std::size_t> corner_at;  // boundary indices of corners
  for (std::size_t i = 0; i < n; ++i)
    if (hull.is_corner(b[i])) corner_at.push_back(i);
  const std::size_t m = corner_at.size();
  const auto side_len = [&](std::size_t i) {
    const std::size_t from = corner_at[i];
    const std::size_t to = corner_at[(i + 1) % m];
    return (to + n - from) % n + 1;
  };

  for (std::size_t i = 0; i < m; ++i) {
    if (side_len(i) < 4) continue;
    std::vector<Point> side;
    for (std::size_t t = 0; t < side_len(i); ++t) side.push_back(b[(corner_at[i] + t) % n]);
    std::vector<Point> out = select_strict(without(pts, side), k - 2, ell);
    out.push_back(side[1]);
    out.push_back(side[2]);
    return out;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (side_len(i) != 2) continue;
    const std::size_t s = corner_at[i];
    const auto at = [&](int off) { return b[(s + 2 * n + off) % n]; };
    const Point u = at(-1), v = at(0), w = at(1), x = at(2);
    if (k == 4) return {u, v, w, x};
    const std::vector<Point> six{at(-2), u, v, w, x, at(3)};
    std::vector<Point> out = select_strict(without(pts, six), k - 4, ell);
    out.insert(out.end(), {u, v, w, x});
    return out;
  }
  // Every side carries exactly one non-corner point: take all of those plus
  // every second corner, skipping two consecutive corners when m is odd.
  std::vector<Point> chosen;
  for (std::size_t i = 0; i < m; ++i) {
    const bool take_corner = i % 2 == 0 && !(m % 2 == 1 && i == m - 1);
    if (take_corner) chosen.push_back(b[corner_at[i]]);
    chosen.push_back(b[(corner_at[i] + 1) % n]);
  }
  if (static_cast<long long>(chosen.size()) < k) {
    throw std::logic_error("strict selection: alternating-corner set too small");
  }
  chosen.resize(static_cast<std::size_t>(k));
  return chosen;
}

}  // namespace

std::vector<Point> strictly_convex_subset_in_convex_position(std::span<const Point> points,
                                                             long long k, long long ell) {
  const std::vector<Point> pts = canonical(points);
  if (k < 1 || ell < 1) throw DomainError("k and ell must be positive");
  if (!is_convex_position(pts)) throw DomainError("input is not in convex position");
  if (static_cast<long long>(max_collinear(pts).count) >= ell) {
    throw DomainError("input has ell collinear points");
  }
  if (static_cast<long long>(pts.size()) < q_formula(k, ell)) {
    throw DomainError("input smaller than q(k, ell)");
  }
  std::vector<Point> out = select_strict(pts, k, ell);
  std::sort(out.begin(), out.end());
  if (static_cast<long long>(out.size()) != k || !is_strictly_convex_position(out)) {
    throw std::logic_error("strict selection produced an invalid subset");
  }
  return out;
}

std::vector<Point> max_convex_position_subset(std::span<const Point> points) {
  const std::vector<Point> pts = canonical(points);
  if (pts.size() <= 2) return pts;
  std::vector<Point> best = ChainDp(pts, false).solve();
  const CollinearWitness line = max_collinear(pts);
  if (line.count > best.size() || (line.count == best.size() && line.points < best)) {
    best = line.points;
  }
  return best;
}

std::vector<Point> max_strictly_convex_subset(std::span<const Point> points) {
  const std::vector<Point> pts = canonical(points);
  if (pts.size() <= 2) return pts;
  std::vector<Point> best = ChainDp(pts, true).solve();
  if (best.size() < 2) best = {pts[0], pts[1]};
  return best;
}

std::vector<Point> k_minimal_convex_subset(const PointSet& points, std::size_t k,
                                           std::optional<std::vector<Point>> start) {
  std::vector<Point> current;
  if (start) {
    current = canonical(*start);
    for (const Point& p : current)
      if (!points.contains(p)) throw DomainError("start set is not a subset of P");
    if (current.size() < k || !is_convex_position(current)) {
      throw DomainError("start set is not a convex-position set of at least k points");
    }
  } else {
    current = max_convex_position_subset(points.points());
    if (current.size() < k) throw DomainError("no k points in convex position");
  }
  current = hull_closure(points.points(), current);

  // Any Y with a strictly smaller hull misses some corner of conv(X), so it
  // suffices to try dropping each corner in turn. Hull area never grows.
  for (;;) {
    const ConvexRegion region(current);
    const std::vector<Point> inside = points_in_hull(points.points(), current);
    std::optional<std::vector<Point>> best;
    Wide best_area = 0;
    for (const Point& c : region.corners()) {
      const std::vector<Point> rest = without(inside, std::span<const Point>(&c, 1));
      std::vector<Point> y = max_convex_position_subset(rest);
      if (y.size() < k) continue;
      const Wide area = ConvexRegion(y).twice_area();
      if (!best || area < best_area) {
        best = std::move(y);
        best_area = area;
      }
    }
    if (!best) return current;
    current = hull_closure(points.points(), *best);
  }
}

std::vector<std::size_t> LayerDecomposition::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : layers) out.push_back(l.size());
  return out;
}

LayerDecomposition layers_from_outer(const PointSet& points, std::span<const Point> outer,
                                     int ell) {
  if (ell < 2) throw DomainError("ell must be at least 2");
  LayerDecomposition d;
  d.ell = ell;
  d.layers.push_back(outer.empty() ? std::vector<Point>{} : convex_hull(outer).boundary);
  for (int i = 2; i <= ell; ++i) {
    const std::vector<Point>& prev = d.layers.back();
    std::vector<Point> inner = without(points_in_hull(points.points(), prev), prev);
    if (i == ell || inner.empty()) {
      d.layers.push_back(std::move(inner));
    } else {
      d.layers.push_back(convex_hull(inner).boundary);
    }
  }
  if (!d.layers.back().empty()) d.apex = *std::min_element(d.layers.back().begin(), d.layers.back().end());
  return d;
}

LayerDecomposition convex_layers(const PointSet& points, int ell, std::size_t k) {
  return layers_from_outer(points, k_minimal_convex_subset(points, k), ell);
}

std::vector<std::vector<Point>> onion_layers(std::span<const Point> points) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> rest = canonical(points);
  while (!rest.empty()) {
    std::vector<Point> layer = convex_hull(rest).boundary;
    rest = without(rest, layer);
    out.push_back(std::move(layer));
  }
  return out;
}

std::vector<Point> max_general_position_subset(std::span<const Point> points) {
  std::vector<Point> chosen;
  for (const Point& p : canonical(points)) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < chosen.size(); ++i)
      for (std::size_t j = i + 1; ok && j < chosen.size(); ++j)
        ok = orient(chosen[i], chosen[j], p) != 0;
    if (ok) chosen.push_back(p);
  }
  return chosen;
}

BigInt binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (long long i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

BigInt es_bound(long long k) {
  if (k < 3) throw DomainError("es_bound needs k >= 3");
  return binomial(2 * k - 5, k - 2) + 1;
}

EsKlBound es_kl_bound(long long k, long long ell) {
  if (k < 3 || ell < 3) throw DomainError("es_kl_bound needs k >= 3 and ell >= 3");
  EsKlBound b;
  const long long target = k % 2 == 1 ? (k - 1) * (ell - 1) / 2 + 1 : (k - 2) * (ell - 1) / 2 + 2;
  b.convex_to_strict = es_bound(target);
  const BigInt es = es_bound(k);
  b.general_position = BigInt(ell - 3) * ((es - 1) * (es - 2) / 2) + es;
  if (b.convex_to_strict <= b.general_position) {
    b.value = b.convex_to_strict;
    b.winner = "convex-to-strict";
  } else {
    b.value = b.general_position;
    b.winner = "general-position";
  }
  return b;
}

}  // namespace emptygon
