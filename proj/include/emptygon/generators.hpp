#pragma once

// Deterministic constructors for the configuration families used as
// examples, extremal witnesses and counterexamples. Each constructor checks
// the property its family is meant to exhibit before returning.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emptygon/geometry.hpp"

namespace emptygon::generators {

enum class Family {
  every_second_side,  // parity picks the odd or even variant
  every_second_side_odd,
  every_second_side_even,
  grid,
  horton,
  collinear_plus_one,
  eppstein_family_a_b,
  eppstein_family_c_d,
  eppstein_family_e,
  random_general_position,
  random_bounded_collinear,
  random_convex_position,
  random_in_box,
};

std::string to_string(Family f);
std::optional<Family> family_from_string(std::string_view tag);
std::vector<std::string> family_names();

struct GeneratorSpec {
  Family family = Family::grid;
  std::vector<long long> parameters;
  std::uint64_t seed = 0;
};

struct Generated {
  PointSet points;
  /// Human-readable properties checked during construction.
  std::vector<std::string> verified;
};

/// Dispatches on the family tag; parameter lists per family:
///   every_second_side*: k ell          grid: m          horton: n
///   collinear_plus_one: ell            eppstein_family_a_b: count apex(0|1)
///   eppstein_family_c_d: count crossing (-1 misses the line's hull)
///   eppstein_family_e: (none)          random_general_position: n
///   random_bounded_collinear: n ell    random_convex_position: n ell
///   random_in_box: n side
Generated generate(const GeneratorSpec& spec);

/// l-1 points on every second side of a convex (k-1)-gon for odd k, or of a
/// (k-2)-gon plus one extra point for even k.
PointSet every_second_side(int k, int ell);
PointSet grid(int m);
/// Horton set of n = 2^j points.
PointSet horton(std::size_t n);
/// ell-1 collinear points plus one apex.
PointSet collinear_plus_one(int ell);
/// `count` collinear points, optionally with one apex off the line.
PointSet eppstein_family_a_b(int count, bool apex);
/// `count` points on a line L and two points v, w on opposite sides of L;
/// segment vw passes through the crossing-th point of L, or misses the hull
/// of L's points when crossing == -1.
PointSet eppstein_family_c_d(int count, int crossing);
PointSet eppstein_family_e();

/// Seeded rejection sampling in a box of side `box` (default grows with n)
/// keeping fewer than ell points on any line.
PointSet random_bounded_collinear(std::size_t n, int ell, std::uint64_t seed,
                                  std::optional<Coord> box = {});
PointSet random_general_position(std::size_t n, std::uint64_t seed);
/// n points in convex position with fewer than ell on a line; hull sides
/// carry random numbers of extra points.
PointSet random_convex_position(std::size_t n, int ell, std::uint64_t seed);
/// n distinct uniform points of the side x side integer box.
PointSet random_in_box(std::size_t n, Coord side, std::uint64_t seed);

}  // namespace emptygon::generators
