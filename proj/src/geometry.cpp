#include "emptygon/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace emptygon {

namespace {

using Int256 = boost::multiprecision::int256_t;

int sign(Wide v) { return (v > 0) - (v < 0); }

// p is within the bounding box of v and w; with collinearity this is
// segment membership.
bool within_box(const Point& p, const Point& v, const Point& w) {
  return std::min(v.x, w.x) <= p.x && p.x <= std::max(v.x, w.x) &&
         std::min(v.y, w.y) <= p.y && p.y <= std::max(v.y, w.y);
}

void check_range(const Point& p) {
  if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate ||
      p.y < -kMaxCoordinate) {
    throw DomainError("coordinate out of supported range: " + to_string(p));
  }
}

// Exact comparison n1/d1 < n2/d2 for positive denominators.
bool fraction_less(Wide n1, Wide d1, Wide n2, Wide d2) {
  return Int256(n1) * Int256(d2) < Int256(n2) * Int256(d1);
}

}  // namespace

std::string to_string(const Point& p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::negative: return "negative";
    case Orientation::zero: return "zero";
    case Orientation::positive: return "positive";
  }
  return "?";
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  if (a == b || b == c || a == c) {
    throw DomainError("orientation requires three distinct points");
  }
  return static_cast<Orientation>(orient(a, b, c));
}

bool on_closed_segment(const Point& p, const Point& v, const Point& w) {
  if (v == w) throw DomainError("segment endpoints coincide");
  return cross(v, w, p) == 0 && within_box(p, v, w);
}

bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  if (a == b && b == c) throw DomainError("triangle vertices all coincide");
  const int o = orient(a, b, c);
  if (o == 0) {
    const auto [lo, hi] = std::minmax({a, b, c});
    return cross(lo, hi, p) == 0 && within_box(p, lo, hi);
  }
  return orient(a, b, p) * o >= 0 && orient(b, c, p) * o >= 0 && orient(c, a, p) * o >= 0;
}

bool in_open_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  const int o = orient(a, b, c);
  if (o == 0) return false;
  return orient(a, b, p) == o && orient(b, c, p) == o && orient(c, a, p) == o;
}

bool segment_meets_open_triangle(const Point& p, const Point& q, const Point& a,
                                 const Point& b, const Point& c) {
  const int o = orient(a, b, c);
  if (o == 0) return false;
  const Point tri[3] = {a, o > 0 ? b : c, o > 0 ? c : b};

  // Points p + t (q - p), t in [0, 1], strictly left of every edge. Each edge
  // contributes an open bound on t; the feasible set is nonempty iff the
  // largest lower bound is below the smallest upper bound.
  Wide lo_num = 0, lo_den = 1;
  Wide hi_num = 1, hi_den = 1;
  for (int e = 0; e < 3; ++e) {
    const Point& e0 = tri[e];
    const Point& e1 = tri[(e + 1) % 3];
    const Wide fp = cross(e0, e1, p);
    const Wide fq = cross(e0, e1, q);
    if (fp > 0 && fq > 0) continue;
    if (fp <= 0 && fq <= 0) return false;
    if (fp > 0) {
      // falling: t < fp / (fp - fq)
      if (fraction_less(fp, fp - fq, hi_num, hi_den)) {
        hi_num = fp;
        hi_den = fp - fq;
      }
    } else {
      // rising: t > -fp / (fq - fp)
      if (fraction_less(lo_num, lo_den, -fp, fq - fp)) {
        lo_num = -fp;
        lo_den = fq - fp;
      }
    }
  }
  return fraction_less(lo_num, lo_den, hi_num, hi_den);
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

Wide twice_area(std::span<const Point> polygon) {
  Wide sum = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& u = polygon[i];
    const Point& v = polygon[(i + 1) % n];
    sum += Wide(u.x) * v.y - Wide(u.y) * v.x;
  }
  return sum;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    check_range(points_[i]);
    if (i > 0 && points_[i] == points_[i - 1]) {
      throw DomainError("duplicate point " + to_string(points_[i]));
    }
  }
}

PointSet::PointSet(std::initializer_list<Point> points)
    : PointSet(std::vector<Point>(points)) {}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::size_t PointSet::index_of(const Point& p) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return points_.size();
  return static_cast<std::size_t>(it - points_.begin());
}

std::vector<Point> canonical(std::span<const Point> points) {
  std::vector<Point> out(points.begin(), points.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CollinearWitness max_collinear(std::span<const Point> input) {
  const std::vector<Point> pts = canonical(input);
  if (pts.empty()) throw DomainError("max_collinear of an empty set");
  CollinearWitness best{1, {pts.front()}};
  if (pts.size() == 1) return best;

  // Every line is discovered from its canonically least point; directions to
  // later points are already sign-normalized because they compare greater.
  std::map<std::pair<Coord, Coord>, std::vector<Point>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    lines.clear();
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Coord dx = pts[j].x - pts[i].x;
      Coord dy = pts[j].y - pts[i].y;
      const Coord g = std::gcd(dx, dy);
      lines[{dx / g, dy / g}].push_back(pts[j]);
    }
    for (auto& [dir, members] : lines) {
      const std::size_t count = members.size() + 1;
      if (count < best.count) continue;
      std::vector<Point> witness;
      witness.reserve(count);
      witness.push_back(pts[i]);
      witness.insert(witness.end(), members.begin(), members.end());
      if (count > best.count || witness < best.points) {
        best.count = count;
        best.points = std::move(witness);
      }
    }
  }
  return best;
}

bool in_general_position(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient(pts[i], pts[j], pts[k]) == 0) return false;
  return true;
}

PointSet perturb_general_position(const PointSet& input) {
  const auto& pts = input.vector();
  const std::size_t n = pts.size();
  if (n == 0) return input;

  Wide scale = std::max<Wide>(static_cast<Wide>(n) + 1, 4);
  std::vector<Point> images(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) {
      const Wide ix = static_cast<Wide>(i);
      const Wide x = scale * pts[i].x + ix;
      const Wide y = scale * pts[i].y + ix * ix;
      if (x > kMaxCoordinate || x < -kMaxCoordinate || y > kMaxCoordinate ||
          y < -kMaxCoordinate) {
        throw DomainError("perturbation exceeds the supported coordinate range");
      }
      images[i] = Point{static_cast<Coord>(x), static_cast<Coord>(y)};
    }
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = i + 1; ok && j < n; ++j)
        for (std::size_t k = j + 1; ok && k < n; ++k) {
          const int before = orient(pts[i], pts[j], pts[k]);
          const int after = orient(images[i], images[j], images[k]);
          ok = after != 0 && (before == 0 || before == after);
        }
    if (ok) break;
    if (scale > kMaxCoordinate) {
      throw DomainError("perturbation exceeds the supported coordinate range");
    }
    scale *= scale;
  }
  PointSet out(images);
  for (std::size_t i = 0; i < n; ++i) {
    if (out[i] != images[i]) throw std::logic_error("perturbation reordered points");
  }
  return out;
}

}  // namespace emptygon
