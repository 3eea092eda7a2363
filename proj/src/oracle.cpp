#include "emptygon/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "emptygon/convexity.hpp"

namespace emptygon::oracle {

namespace {

class Deadline {
 public:
  explicit Deadline(double seconds)
      : enabled_(seconds > 0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}

  void check() const {
    if (enabled_ && std::chrono::steady_clock::now() > end_) {
      throw BudgetExceeded("oracle time limit exceeded");
    }
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point end_;
};

void require(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(n) +
                         " points exceeds the complete-search budget of " +
                         std::to_string(limit));
  }
}

// Calls f(indices) for every r-combination of [0, n) in lexicographic order
// until it returns true. Returns whether it stopped early.
template <class F>
bool for_each_combination(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return false;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    if (f(idx)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Point> pick(const PointSet& pts, const std::vector<std::size_t>& idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(pts[i]);
  return out;
}

}  // namespace

std::optional<HoleCertificate> oracle_k_hole(const PointSet& points, std::size_t k,
                                             const OracleBudget& budget) {
  if (k < 3) throw DomainError("k-hole search needs k >= 3");
  require(points.size(), k <= 5 ? budget.holes_up_to_5 : budget.holes_6_7, "oracle_k_hole");
  const Deadline deadline(budget.time_limit_seconds);
  std::optional<HoleCertificate> found;
  std::size_t tick = 0;
  for_each_combination(points.size(), k, [&](const std::vector<std::size_t>& idx) {
    if (++tick % 4096 == 0) deadline.check();
    const std::vector<Point> subset = pick(points, idx);
    if (hole_violation(points, subset).empty()) {
      found = HoleCertificate::make(points, subset);
      return true;
    }
    return false;
  });
  return found;
}

std::size_t oracle_max_convex_subset(const PointSet& points, bool strict,
                                     const OracleBudget& budget) {
  require(points.size(), budget.convex_subsets, "oracle_max_convex_subset");
  const Deadline deadline(budget.time_limit_seconds);
  const std::size_t n = points.size();
  if (n <= 2) return n;
  // Both properties are hereditary, so the first size with no witness ends
  // the scan.
  std::size_t best = 2;
  for (std::size_t r = 3; r <= n; ++r) {
    const bool any = for_each_combination(n, r, [&](const std::vector<std::size_t>& idx) {
      deadline.check();
      const std::vector<Point> subset = pick(points, idx);
      return strict ? is_strictly_convex_position(subset) : is_convex_position(subset);
    });
    if (!any) break;
    best = r;
  }
  return best;
}

bool oracle_k_minimality(const PointSet& points, std::span<const Point> x, std::size_t k,
                         const OracleBudget& budget) {
  require(points.size(), budget.k_minimality, "oracle_k_minimality");
  const Deadline deadline(budget.time_limit_seconds);
  const std::vector<Point> inside = points_in_hull(points.points(), x);
  const std::vector<Point> corners = ConvexRegion(x).corners();
  const std::size_t n = inside.size();
  // conv(Y) is strictly inside conv(X) iff Y lies in conv(X) and misses a
  // corner of conv(X).
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) < k) continue;
    if ((mask & 0xfff) == 0) deadline.check();
    std::vector<Point> y;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) y.push_back(inside[i]);
    bool misses_corner = false;
    for (const Point& c : corners)
      if (std::find(y.begin(), y.end(), c) == y.end()) misses_corner = true;
    if (misses_corner && is_convex_position(y)) return false;
  }
  return true;
}

std::size_t oracle_max_collinear(const PointSet& points) {
  const std::size_t n = points.size();
  std::size_t best = n == 0 ? 0 : 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t on_line = 0;
      for (std::size_t t = 0; t < n; ++t)
        if (orient(points[i], points[j], points[t]) == 0) ++on_line;
      best = std::max(best, on_line);
    }
  return best;
}

}  // namespace emptygon::oracle
