#pragma once

// Text input: polynomial expressions and problem files.
//
//   ring n=3 vars=d1,d2,d3
//   matrix 1 3
//   d1, d2, d3
//   space=Dprime
//
// '#' starts a comment. Variables x1..xn and d1..dn are always accepted as
// aliases for the declared names.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdectl/poly_matrix.hpp"
#include "pdectl/polynomial.hpp"
#include "pdectl/signal_space.hpp"

namespace pdectl {

struct Ring {
  std::size_t nvars = 0;
  std::vector<std::string> names;

  /// d1..dn
  static Ring standard(std::size_t nvars);
};

/// Parses an expression over `ring`. `line` and `column` locate src in its
/// file so that errors point at the right place.
Polynomial parse_polynomial(std::string_view src, const Ring& ring, std::size_t line = 1, std::size_t column = 1);

struct ProblemFile {
  Ring ring;
  PolyMatrix matrix;
  std::optional<SignalSpace> space;
  std::optional<std::string> order;
  std::optional<std::string> task;
};

ProblemFile parse_problem(std::string_view text);
/// Reads and parses a file; I/O failures are reported as InvalidArgument.
ProblemFile parse_matrix_file(const std::filesystem::path& path);

/// Renders a problem back into the file format.
std::string render_problem(const ProblemFile& problem);

}  // namespace pdectl
