#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "emptygon/geometry.hpp"

namespace emptygon::cli {

inline constexpr const char* kToolVersion = "emptygon 1.0.0";

enum ExitCode : int { kOk = 0, kInvalid = 1, kInputError = 2, kNoCertificate = 3 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One "x y" pair per line; blank lines and lines starting with '#' are
/// skipped. Errors carry "name:line:" prefixes.
PointSet parse_points(std::istream& in, const std::string& name);
PointSet read_point_file(const std::string& path);
std::string format_points(const PointSet& points);

/// Entry point behind the emptygon executable; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace emptygon::cli
