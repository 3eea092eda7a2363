#include "emptygon/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "emptygon/convexity.hpp"
#include "emptygon/holes.hpp"

namespace emptygon::generators {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 13> kFamilies{{
    {Family::every_second_side, "every_second_side"},
    {Family::every_second_side_odd, "every_second_side_odd"},
    {Family::every_second_side_even, "every_second_side_even"},
    {Family::grid, "grid"},
    {Family::horton, "horton"},
    {Family::collinear_plus_one, "collinear_plus_one"},
    {Family::eppstein_family_a_b, "eppstein_family_a_b"},
    {Family::eppstein_family_c_d, "eppstein_family_c_d"},
    {Family::eppstein_family_e, "eppstein_family_e"},
    {Family::random_general_position, "random_general_position"},
    {Family::random_bounded_collinear, "random_bounded_collinear"},
    {Family::random_convex_position, "random_convex_position"},
    {Family::random_in_box, "random_in_box"},
}};

Point rounded(double x, double y) { return Point{std::llround(x), std::llround(y)}; }

Coord uniform(std::mt19937_64& rng, Coord lo, Coord hi) {
  return std::uniform_int_distribution<Coord>(lo, hi)(rng);
}

// Points collinear with p and q among `pts`, p and q included.
std::size_t on_line(const std::vector<Point>& pts, const Point& p, const Point& q) {
  std::size_t c = 0;
  for (const Point& r : pts)
    if (orient(p, q, r) == 0) ++c;
  return c;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

long long param(const GeneratorSpec& spec, std::size_t i, const char* name) {
  if (i >= spec.parameters.size()) {
    throw DomainError(to_string(spec.family) + ": missing parameter " + name);
  }
  return spec.parameters[i];
}

void expect_params(const GeneratorSpec& spec, std::size_t n) {
  if (spec.parameters.size() != n) {
    throw DomainError(to_string(spec.family) + " takes " + std::to_string(n) + " parameter(s)");
  }
}

std::optional<PointSet> try_every_second_side(int k, int ell, double radius) {
  const bool odd = k % 2 == 1;
  const int gon = odd ? k - 1 : k - 2;
  const int per_side = ell - 1;  // points on each long side, endpoints included
  std::vector<Point> corners(static_cast<std::size_t>(gon));
  std::vector<Point> pts;
  const auto approx = [&](int i) {
    const double t = 2 * std::numbers::pi * i / gon + 0.1;
    return std::pair{radius * std::cos(t), radius * std::sin(t)};
  };
  for (int j = 0; j < gon / 2; ++j) {
    const auto [x0, y0] = approx(2 * j);
    const auto [x1, y1] = approx(2 * j + 1);
    const Point a = rounded(x0, y0);
    const Coord div = per_side - 1;
    const Point step = rounded((x1 - static_cast<double>(a.x)) / static_cast<double>(div),
                               (y1 - static_cast<double>(a.y)) / static_cast<double>(div));
    if (step == Point{}) return std::nullopt;
    for (Coord t = 0; t <= div; ++t) pts.push_back(Point{a.x + t * step.x, a.y + t * step.y});
    corners[static_cast<std::size_t>(2 * j)] = a;
    corners[static_cast<std::size_t>(2 * j + 1)] = pts.back();
  }
  if (!odd) {
    // One point just outside the short side between corners 1 and 2.
    const Point& u = corners[1];
    const Point& v = corners[2];
    const double dx = static_cast<double>(v.x - u.x);
    const double dy = static_cast<double>(v.y - u.y);
    // Stay inside the wedge cut out by the two neighbouring long sides.
    const double lift = 0.25 * std::min(std::tan(2 * std::numbers::pi / gon), 4.0) / 2;
    // Off-centre, so the symmetry axis does not line it up with side points.
    pts.push_back(rounded(static_cast<double>(u.x) + 0.45 * dx + dy * lift,
                          static_cast<double>(u.y) + 0.45 * dy - dx * lift));
  }
  const Point last = pts.back();
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return std::nullopt;
  if (!is_convex_position(pts)) return std::nullopt;
  if (static_cast<int>(max_collinear(pts).count) != std::max(per_side, 2)) return std::nullopt;
  if (static_cast<int>(convex_hull(pts).corners.size()) != gon + (odd ? 0 : 1)) return std::nullopt;
  if (!odd) {
    const Point extra = last;
    for (const Point& p : pts)
      if (p != extra && on_line(pts, extra, p) != 2) return std::nullopt;
  }
  if (static_cast<int>(max_strictly_convex_subset(pts).size()) >= k) return std::nullopt;
  return PointSet(pts);
}

std::vector<Point> horton_points(std::size_t n) {
  if (n == 1) return {Point{0, 0}};
  const std::vector<Point> half = horton_points(n / 2);
  const std::size_t h = half.size();
  Coord max_y = 0;
  for (const Point& p : half) max_y = std::max(max_y, p.y);
  // Raise the odd copy until every line through two even points passes
  // below all odd points and every line through two odd points passes above
  // all even points.
  for (Coord lift = std::max<Coord>(1, max_y);; lift *= 2) {
    if (lift > kMaxCoordinate / 4) throw std::logic_error("horton lift overflow");
    std::vector<Point> even, odd;
    for (const Point& p : half) {
      even.push_back({2 * p.x, p.y});
      odd.push_back({2 * p.x + 1, p.y + lift});
    }
    bool ok = true;
    for (std::size_t i = 0; ok && i < h; ++i)
      for (std::size_t j = i + 1; ok && j < h; ++j)
        for (std::size_t t = 0; ok && t < h; ++t)
          ok = orient(even[i], even[j], odd[t]) > 0 && orient(odd[i], odd[j], even[t]) < 0;
    if (!ok) continue;
    std::vector<Point> out;
    for (std::size_t i = 0; i < h; ++i) {
      out.push_back(even[i]);
      out.push_back(odd[i]);
    }
    return out;
  }
}

}  // namespace

std::string to_string(Family f) {
  for (const auto& [fam, name] : kFamilies)
    if (fam == f) return std::string(name);
  return "?";
}

std::optional<Family> family_from_string(std::string_view tag) {
  for (const auto& [fam, name] : kFamilies)
    if (name == tag) return fam;
  return std::nullopt;
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& entry : kFamilies) out.emplace_back(entry.second);
  return out;
}

PointSet every_second_side(int k, int ell) {
  require(k >= 5, "every_second_side needs k >= 5");
  require(ell >= 3, "every_second_side needs ell >= 3");
  for (double radius = 64.0 * k * ell; radius < 1e15; radius *= 2) {
    if (auto p = try_every_second_side(k, ell, radius)) return *p;
  }
  throw std::logic_error("every_second_side: no integer realization found");
}

PointSet grid(int m) {
  require(m >= 2, "grid needs m >= 2");
  std::vector<Point> pts;
  for (Coord x = 0; x < m; ++x)
    for (Coord y = 0; y < m; ++y) pts.push_back({x, y});
  PointSet out(std::move(pts));
  if (m <= 5 && find_k_hole(out, 5)) throw std::logic_error("grid unexpectedly has a 5-hole");
  return out;
}

PointSet horton(std::size_t n) {
  require(n >= 1 && (n & (n - 1)) == 0, "horton needs a power of two");
  PointSet out(horton_points(n));
  if (!in_general_position(out.points())) throw std::logic_error("horton set not in general position");
  if (n <= 32 && find_k_hole(out, 7)) throw std::logic_error("horton set has a 7-hole");
  return out;
}

PointSet collinear_plus_one(int ell) {
  require(ell >= 2, "collinear_plus_one needs ell >= 2");
  std::vector<Point> pts;
  for (Coord i = 0; i + 1 < ell; ++i) pts.push_back({i, 0});
  pts.push_back({0, 1});
  PointSet out(std::move(pts));
  if (max_strictly_convex_subset(out.points()).size() > 3) {
    throw std::logic_error("collinear_plus_one has four strictly convex points");
  }
  return out;
}

PointSet eppstein_family_a_b(int count, bool apex) {
  require(count >= 1, "family (a)/(b) needs at least one collinear point");
  require(count + (apex ? 1 : 0) >= 3, "family (a)/(b) needs at least three points");
  std::vector<Point> pts;
  for (Coord i = 0; i < count; ++i) pts.push_back({i, 0});
  if (apex) pts.push_back({count / 2, 1});
  PointSet out(std::move(pts));
  if (classify_no_four_hole(out).tag == NoFourHoleTag::has_four_hole) {
    throw std::logic_error("family (a)/(b) instance has a 4-hole");
  }
  return out;
}

PointSet eppstein_family_c_d(int count, int crossing) {
  require(count >= 2, "family (c)/(d) needs at least two points on L");
  require(crossing >= -1 && crossing < count, "crossing must be -1 or index a point on L");
  std::vector<Point> pts;
  for (Coord i = 0; i < count; ++i) pts.push_back({2 * i, 0});
  const Coord cx = crossing >= 0 ? 2 * Coord{crossing} : -1;
  pts.push_back({cx + 1, 1});
  pts.push_back({cx - 1, -1});
  PointSet out(std::move(pts));
  if (classify_no_four_hole(out).tag == NoFourHoleTag::has_four_hole) {
    throw std::logic_error("family (c)/(d) instance has a 4-hole");
  }
  return out;
}

PointSet eppstein_family_e() {
  const PointSet& fixture = exceptional_six_point_fixture();
  if (classify_no_four_hole(fixture).tag != NoFourHoleTag::six_point_exceptional) {
    throw std::logic_error("exceptional fixture misclassified");
  }
  return fixture;
}

PointSet random_bounded_collinear(std::size_t n, int ell, std::uint64_t seed,
                                  std::optional<Coord> box) {
  require(n >= 1, "need at least one point");
  require(ell >= 3, "random_bounded_collinear needs ell >= 3");
  const Coord side = box.value_or(std::max<Coord>(16, 4 * static_cast<Coord>(n * n)));
  require(side >= 1, "box side must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  const std::size_t budget = 1000 + 200 * n;
  for (std::size_t attempt = 0; pts.size() < n; ++attempt) {
    if (attempt >= budget) throw DomainError("sampling budget exhausted (box too small)");
    const Point p{uniform(rng, 0, side - 1), uniform(rng, 0, side - 1)};
    if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < pts.size(); ++i) {
      ok = on_line(pts, p, pts[i]) + 1 < static_cast<std::size_t>(ell);
    }
    if (ok) pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

PointSet random_general_position(std::size_t n, std::uint64_t seed) {
  return random_bounded_collinear(n, 3, seed);
}

PointSet random_convex_position(std::size_t n, int ell, std::uint64_t seed) {
  require(ell >= 3, "random_convex_position needs ell >= 3");
  require(n >= 1, "need at least one point");
  std::mt19937_64 rng(seed);
  if (n <= 2) {
    std::vector<Point> pts{{0, 0}, {1, 0}};
    pts.resize(n);
    return PointSet(std::move(pts));
  }

  const std::size_t cap = static_cast<std::size_t>(ell - 3);  // extra points per side
  const std::size_t min_corners = std::max<std::size_t>(3, (n + cap) / (cap + 1));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(min_corners, n)(rng);
    std::vector<std::size_t> extra(m, 0);
    for (std::size_t left = n - m; left > 0;) {
      const std::size_t s = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
      if (extra[s] < cap) {
        ++extra[s];
        --left;
      }
    }
    std::vector<double> angles(m);
    std::uniform_real_distribution<double> turn(0, 2 * std::numbers::pi);
    for (double& a : angles) a = turn(rng);
    std::sort(angles.begin(), angles.end());
    // Corners on a circle, scaled so every side has enough lattice points.
    const double radius = 40.0 * static_cast<double>(m);
    const Coord scale = ell;
    std::vector<Point> corners;
    for (double a : angles) {
      const Point c = rounded(radius * std::cos(a), radius * std::sin(a));
      corners.push_back({c.x * scale, c.y * scale});
    }
    if (!is_strictly_convex_position(corners) ||
        std::adjacent_find(corners.begin(), corners.end()) != corners.end() ||
        canonical(corners).size() != m) {
      continue;
    }
    std::vector<Point> pts;
    for (std::size_t i = 0; i < m; ++i) {
      const Point& a = corners[i];
      const Point& b = corners[(i + 1) % m];
      pts.push_back(a);
      const Coord dx = b.x - a.x, dy = b.y - a.y;
      const Coord g = std::gcd(dx, dy);
      std::vector<Coord> steps(static_cast<std::size_t>(g - 1));
      std::iota(steps.begin(), steps.end(), 1);
      std::shuffle(steps.begin(), steps.end(), rng);
      steps.resize(extra[i]);
      for (Coord t : steps) pts.push_back({a.x + dx / g * t, a.y + dy / g * t});
    }
    if (!is_convex_position(pts) || max_collinear(pts).count >= static_cast<std::size_t>(ell)) {
      continue;
    }
    return PointSet(std::move(pts));
  }
  throw std::logic_error("random_convex_position: no realization found");
}

PointSet random_in_box(std::size_t n, Coord side, std::uint64_t seed) {
  require(side >= 1, "box side must be positive");
  require(static_cast<Wide>(n) <= Wide(side) * side, "box too small for n distinct points");
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  while (pts.size() < n) {
    const Point p{uniform(rng, 0, side - 1), uniform(rng, 0, side - 1)};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

Generated generate(const GeneratorSpec& spec) {
  Generated g;
  const auto& p = spec.parameters;
  const auto as_int = [](long long v) { return static_cast<int>(v); };
  switch (spec.family) {
    case Family::every_second_side:
    case Family::every_second_side_odd:
    case Family::every_second_side_even: {
      expect_params(spec, 2);
      const int k = as_int(param(spec, 0, "k"));
      const int ell = as_int(param(spec, 1, "ell"));
      if (spec.family == Family::every_second_side_odd) require(k % 2 == 1, "odd variant needs odd k");
      if (spec.family == Family::every_second_side_even) {
        require(k % 2 == 0 && k >= 6, "even variant needs even k >= 6");
      }
      g.points = every_second_side(k, ell);
      g.verified.push_back("convex position");
      g.verified.push_back("max_collinear=" + std::to_string(max_collinear(g.points).count) +
                           " < ell=" + std::to_string(ell));
      g.verified.push_back("max_strictly_convex=" +
                           std::to_string(max_strictly_convex_subset(g.points.points()).size()) +
                           " < k=" + std::to_string(k));
      break;
    }
    case Family::grid: {
      expect_params(spec, 1);
      const int m = as_int(p[0]);
      g.points = grid(m);
      g.verified.push_back("max_collinear=" + std::to_string(m));
      if (m <= 5) g.verified.push_back("no 5-hole");
      break;
    }
    case Family::horton: {
      expect_params(spec, 1);
      require(p[0] >= 1, "horton needs n >= 1");
      g.points = horton(static_cast<std::size_t>(p[0]));
      g.verified.push_back("general position");
      if (p[0] <= 32) g.verified.push_back("no 7-hole");
      break;
    }
    case Family::collinear_plus_one: {
      expect_params(spec, 1);
      g.points = collinear_plus_one(as_int(p[0]));
      g.verified.push_back("no 4 points in strictly convex position");
      break;
    }
    case Family::eppstein_family_a_b:
    case Family::eppstein_family_c_d:
    case Family::eppstein_family_e: {
      if (spec.family == Family::eppstein_family_a_b) {
        expect_params(spec, 2);
        require(p[1] == 0 || p[1] == 1, "apex flag must be 0 or 1");
        g.points = eppstein_family_a_b(as_int(p[0]), p[1] == 1);
      } else if (spec.family == Family::eppstein_family_c_d) {
        expect_params(spec, 2);
        g.points = eppstein_family_c_d(as_int(p[0]), as_int(p[1]));
      } else {
        expect_params(spec, 0);
        g.points = eppstein_family_e();
      }
      g.verified.push_back("no 4-hole (" + to_string(classify_no_four_hole(g.points).tag) + ")");
      break;
    }
    case Family::random_general_position: {
      expect_params(spec, 1);
      require(p[0] >= 1, "n must be positive");
      g.points = random_general_position(static_cast<std::size_t>(p[0]), spec.seed);
      g.verified.push_back("general position");
      break;
    }
    case Family::random_bounded_collinear:
    case Family::random_convex_position: {
      expect_params(spec, 2);
      require(p[0] >= 1, "n must be positive");
      const auto n = static_cast<std::size_t>(p[0]);
      const int ell = as_int(p[1]);
      g.points = spec.family == Family::random_bounded_collinear
                     ? random_bounded_collinear(n, ell, spec.seed)
                     : random_convex_position(n, ell, spec.seed);
      if (spec.family == Family::random_convex_position) g.verified.push_back("convex position");
      g.verified.push_back("max_collinear=" + std::to_string(max_collinear(g.points).count) +
                           " < ell=" + std::to_string(ell));
      break;
    }
    case Family::random_in_box: {
      expect_params(spec, 2);
      require(p[0] >= 1, "n must be positive");
      g.points = random_in_box(static_cast<std::size_t>(p[0]), p[1], spec.seed);
      break;
    }
  }
  return g;
}

}  // namespace emptygon::generators
