#pragma once

// Brute-force ground truth. Every routine here enumerates subsets directly
// and refuses (throws BudgetExceeded) rather than answer from a partial scan.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>

#include "emptygon/geometry.hpp"
#include "emptygon/holes.hpp"

namespace emptygon::oracle {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  std::size_t holes_up_to_5 = 30;  // k <= 5
  std::size_t holes_6_7 = 20;      // k >= 6
  std::size_t convex_subsets = 12;
  std::size_t k_minimality = 14;
  double time_limit_seconds = 0;   // 0: unlimited
};

/// Lexicographically first k-subset (by canonical indices) that is a hole.
std::optional<HoleCertificate> oracle_k_hole(const PointSet& points, std::size_t k,
                                             const OracleBudget& budget = {});

/// Size of the largest subset in (strictly) convex position.
std::size_t oracle_max_convex_subset(const PointSet& points, bool strict,
                                     const OracleBudget& budget = {});

/// No Y of >= k points of P in convex position has conv(Y) strictly inside
/// conv(X).
bool oracle_k_minimality(const PointSet& points, std::span<const Point> x, std::size_t k,
                         const OracleBudget& budget = {});

/// Largest number of points of P on a common line, by pairwise line scan.
std::size_t oracle_max_collinear(const PointSet& points);

}  // namespace emptygon::oracle
