#include "emptygon/holes.hpp"

#include <algorithm>
#include <numeric>

#include "emptygon/convexity.hpp"

namespace emptygon {

namespace {

Wide dist2(const Point& a, const Point& b) {
  const Wide dx = Wide(b.x) - a.x;
  const Wide dy = Wide(b.y) - a.y;
  return dx * dx + dy * dy;
}

bool has_duplicates(std::span<const Point> pts) {
  std::vector<Point> v(pts.begin(), pts.end());
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace

std::string hole_violation(const PointSet& points, std::span<const Point> subset) {
  for (const Point& p : subset)
    if (!points.contains(p)) return "point not in set";
  if (has_duplicates(subset)) return "duplicate point";
  if (subset.size() < 3) return "fewer than 3 points";
  if (!is_strictly_convex_position(subset)) return "not strictly convex";
  const ConvexRegion region(subset);
  for (const Point& p : points) {
    if (std::find(subset.begin(), subset.end(), p) != subset.end()) continue;
    if (region.contains(p)) return "hull not empty";
  }
  return "";
}

std::string collinear_violation(const PointSet& points, std::span<const Point> subset) {
  for (const Point& p : subset)
    if (!points.contains(p)) return "point not in set";
  if (has_duplicates(subset)) return "duplicate point";
  for (std::size_t i = 2; i < subset.size(); ++i)
    if (orient(subset[0], subset[1], subset[i]) != 0) return "not collinear";
  return "";
}

HoleCertificate HoleCertificate::make(const PointSet& ambient, std::span<const Point> vertices) {
  const std::string why = hole_violation(ambient, vertices);
  if (!why.empty()) throw DomainError("not a hole: " + why);
  HoleCertificate h;
  h.vertices_ = convex_hull(vertices).corners;
  return h;
}

Wide HoleCertificate::twice_area() const { return -emptygon::twice_area(vertices_); }

CollinearCertificate CollinearCertificate::make(const PointSet& ambient,
                                                std::span<const Point> points) {
  const std::string why = collinear_violation(ambient, points);
  if (!why.empty()) throw DomainError("not a collinear certificate: " + why);
  CollinearCertificate c;
  c.points_ = canonical(points);
  return c;
}

bool is_hole(const PointSet& points, std::span<const Point> subset) {
  for (const Point& p : subset)
    if (!points.contains(p)) throw DomainError("hole candidate is not a subset of P");
  if (subset.size() < 3) throw DomainError("a hole needs at least three points");
  return hole_violation(points, subset).empty();
}

void for_each_k_hole(const PointSet& points, std::size_t k,
                     const std::function<bool(const std::vector<Point>&)>& visit,
                     std::optional<std::span<const Point>> candidates) {
  if (k < 3) throw DomainError("k-hole search needs k >= 3");
  const std::vector<Point> cands = candidates ? canonical(*candidates) : points.vector();

  for (std::size_t ai = 0; ai < cands.size(); ++ai) {
    const Point anchor = cands[ai];
    std::vector<Point> others(cands.begin() + static_cast<std::ptrdiff_t>(ai) + 1, cands.end());
    const std::size_t m = others.size();
    if (m + 1 < k) break;
    std::sort(others.begin(), others.end(), [&](const Point& u, const Point& v) {
      const int o = orient(anchor, u, v);
      if (o != 0) return o > 0;
      return dist2(anchor, u) < dist2(anchor, v);
    });
    std::vector<int> ray(m, 0);
    for (std::size_t i = 1; i < m; ++i)
      ray[i] = ray[i - 1] + (orient(anchor, others[i - 1], others[i]) != 0 ? 1 : 0);

    // Fan triangles (anchor, u, v) with nothing else of P in the closed region.
    std::vector<std::vector<signed char>> empty(m, std::vector<signed char>(m, -1));
    const auto fan_empty = [&](std::size_t i, std::size_t j) {
      signed char& memo = empty[i][j];
      if (memo < 0) {
        memo = 1;
        for (const Point& p : points) {
          if (p == anchor || p == others[i] || p == others[j]) continue;
          if (p < anchor) continue;  // cannot lie in a triangle anchored at its least point
          if (in_closed_triangle(p, anchor, others[i], others[j])) {
            memo = 0;
            break;
          }
        }
      }
      return memo == 1;
    };

    std::vector<std::size_t> chain;
    bool stop = false;
    std::function<void()> extend = [&]() {
      const std::size_t cur = chain.back();
      const Point& prev = chain.size() >= 2 ? others[chain[chain.size() - 2]] : anchor;
      if (chain.size() + 1 == k) {
        if (orient(prev, others[cur], anchor) <= 0) return;
        std::vector<Point> poly{anchor};
        for (std::size_t i : chain) poly.push_back(others[i]);
        stop = visit(poly);
        return;
      }
      for (std::size_t w = cur + 1; w < m && !stop; ++w) {
        if (ray[w] == ray[cur]) continue;
        if (m - w < k - 1 - chain.size()) break;
        if (orient(prev, others[cur], others[w]) <= 0) continue;
        if (!fan_empty(cur, w)) continue;
        chain.push_back(w);
        extend();
        chain.pop_back();
      }
    };
    for (std::size_t v = 0; v < m && !stop; ++v) {
      chain.assign(1, v);
      extend();
    }
    if (stop) return;
  }
}

std::optional<HoleCertificate> find_k_hole(const PointSet& points, std::size_t k) {
  if (k < 3) throw DomainError("k-hole search needs k >= 3");
  std::optional<HoleCertificate> found;
  for_each_k_hole(points, k, [&](const std::vector<Point>& poly) {
    found = HoleCertificate::make(points, poly);
    return true;
  });
  return found;
}

std::size_t largest_hole_size(const PointSet& points, std::size_t max_k) {
  std::size_t best = 0;
  // A k-hole minus a vertex is a (k-1)-hole, so the first miss ends the scan.
  for (std::size_t k = 3; k <= max_k; ++k) {
    if (!find_k_hole(points, k)) break;
    best = k;
  }
  return best;
}

VisibilityGraph::VisibilityGraph(const PointSet& points) : vertices_(points) {
  const std::size_t n = points.size();
  adj_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool visible = true;
      for (std::size_t t = 0; t < n && visible; ++t) {
        if (t == i || t == j) continue;
        visible = !on_closed_segment(points[t], points[i], points[j]);
      }
      if (visible) {
        adj_[i][j] = adj_[j][i] = true;
        edges_.emplace_back(i, j);
      }
    }
}

bool VisibilityGraph::adjacent(const Point& p, const Point& q) const {
  const std::size_t i = vertices_.index_of(p);
  const std::size_t j = vertices_.index_of(q);
  if (i == vertices_.size() || j == vertices_.size()) throw DomainError("point not in graph");
  return adj_[i][j];
}

bool VisibilityGraph::is_clique(std::span<const Point> subset) const {
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (!adjacent(subset[i], subset[j])) return false;
  return true;
}

bool VisibilityGraph::crossing_free() const {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    for (std::size_t f = e + 1; f < edges_.size(); ++f) {
      const auto [a, b] = edges_[e];
      const auto [c, d] = edges_[f];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_cross_properly(vertices_[a], vertices_[b], vertices_[c], vertices_[d])) {
        return false;
      }
    }
  return true;
}

VisibilityGraph visibility_graph(const PointSet& points) {
  if (points.size() < 2) throw DomainError("visibility graph needs two points");
  return VisibilityGraph(points);
}

HoleCertificate min_area_five_hole(const PointSet& points, const HoleCertificate& hole) {
  if (hole.k() != 5 || !is_hole(points, hole.vertices())) {
    throw DomainError("min_area_five_hole expects a 5-hole of P");
  }
  const std::vector<Point> inside = points_in_hull(points.points(), hole.vertices());
  std::optional<HoleCertificate> best;
  for_each_k_hole(
      points, 5,
      [&](const std::vector<Point>& poly) {
        HoleCertificate h = HoleCertificate::make(points, poly);
        if (!best || h.twice_area() < best->twice_area() ||
            (h.twice_area() == best->twice_area() && h.vertices() < best->vertices())) {
          best = std::move(h);
        }
        return false;
      },
      std::span<const Point>(inside));
  return *best;
}

CliqueResult find_visible_5_clique(const PointSet& points, std::size_t ell) {
  if (points.size() < 5) throw DomainError("visible 5-clique search needs five points");
  const CollinearWitness line = max_collinear(points);
  if (line.count >= ell) {
    return CollinearCertificate::make(
        points, std::span<const Point>(line.points).first(static_cast<std::size_t>(ell)));
  }
  const std::optional<HoleCertificate> hole = find_k_hole(points, 5);
  if (!hole) return Inconclusive{"no 5-hole and fewer than ell collinear points"};
  const HoleCertificate refined = min_area_five_hole(points, *hole);
  if (!VisibilityGraph(points).is_clique(refined.vertices())) {
    throw std::logic_error("minimum-area 5-hole corners are not pairwise visible");
  }
  return VisibleClique{refined.vertices()};
}

std::string to_string(NoFourHoleTag tag) {
  switch (tag) {
    case NoFourHoleTag::all_but_one_collinear: return "all-but-one-collinear";
    case NoFourHoleTag::two_apex_line: return "two-apex-line";
    case NoFourHoleTag::six_point_exceptional: return "six-point-exceptional";
    case NoFourHoleTag::has_four_hole: return "has-four-hole";
  }
  return "?";
}

const PointSet& exceptional_six_point_fixture() {
  // Every 6-subset of the 7x7 grid with no 4-hole and at most three points on
  // a line has this order type (3888 sets, one class).
  static const PointSet fixture{{0, 0}, {0, 4}, {1, 1}, {2, 2}, {3, 1}, {4, 1}};
  return fixture;
}

bool same_order_type(std::span<const Point> a, std::span<const Point> reference) {
  const std::size_t n = a.size();
  if (n != reference.size()) return false;
  if (n > 8) throw DomainError("order type comparison limited to 8 points");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int s : {1, -1}) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < n; ++i)
        for (std::size_t j = i + 1; ok && j < n; ++j)
          for (std::size_t k = j + 1; ok && k < n; ++k)
            ok = orient(a[perm[i]], a[perm[j]], a[perm[k]]) ==
                 s * orient(reference[i], reference[j], reference[k]);
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

std::optional<std::vector<Point>> two_apex_line(const PointSet& points) {
  const std::size_t n = points.size();
  if (n < 4) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& v = points[i];
      const Point& w = points[j];
      std::vector<Point> rest;
      for (const Point& p : points)
        if (p != v && p != w) rest.push_back(p);
      bool line = true;
      for (std::size_t t = 2; line && t < rest.size(); ++t)
        line = orient(rest[0], rest[1], rest[t]) == 0;
      if (!line) continue;
      if (orient(rest[0], rest[1], v) * orient(rest[0], rest[1], w) >= 0) continue;
      // conv(rest) is the segment [front, back]; vw meets it in a point of
      // rest, or misses it entirely.
      const bool through_point = std::any_of(rest.begin(), rest.end(),
                                             [&](const Point& r) { return orient(v, w, r) == 0; });
      const bool misses = orient(v, w, rest.front()) * orient(v, w, rest.back()) > 0;
      if (!through_point && !misses) continue;
      std::vector<Point> witness{v, w};
      witness.insert(witness.end(), rest.begin(), rest.end());
      return witness;
    }
  return std::nullopt;
}

}  // namespace

NoFourHoleFamily classify_no_four_hole(const PointSet& points) {
  if (points.size() < 3) throw DomainError("classification needs three points");
  NoFourHoleFamily out;
  const std::optional<HoleCertificate> hole = find_k_hole(points, 4);
  out.visibility_crossing_free = VisibilityGraph(points).crossing_free();

  std::optional<NoFourHoleTag> family;
  std::vector<Point> witness;
  const CollinearWitness line = max_collinear(points);
  if (line.count + 1 >= points.size()) {
    family = NoFourHoleTag::all_but_one_collinear;
    witness = line.points;
    for (const Point& p : points)
      if (std::find(line.points.begin(), line.points.end(), p) == line.points.end())
        witness.push_back(p);
  } else if (auto w = two_apex_line(points)) {
    family = NoFourHoleTag::two_apex_line;
    witness = std::move(*w);
  } else if (points.size() == 6 &&
             same_order_type(points.points(), exceptional_six_point_fixture().points())) {
    family = NoFourHoleTag::six_point_exceptional;
    witness = points.vector();
  }
  out.matches_family = family.has_value();

  const bool no_hole = !hole.has_value();
  if (no_hole != out.visibility_crossing_free || no_hole != out.matches_family) {
    throw std::logic_error("no-4-hole characterization disagrees on this instance");
  }
  if (hole) {
    out.tag = NoFourHoleTag::has_four_hole;
    out.witness = hole->vertices();
  } else {
    out.tag = *family;
    out.witness = std::move(witness);
  }
  return out;
}

}  // namespace emptygon
