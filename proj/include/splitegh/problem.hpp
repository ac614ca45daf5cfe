#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitegh/polynomial.hpp"

namespace splitegh {

/// A parsed problem file:
///
///   # comment
///   vars: 5
///   field: rationals          (or: field: prime 32003)
///   powers: 2,2,2,2,2         (optional)
///   ideal:
///   x1*x2 + x1*x3
///   sequence:
///   (x1)*(x1 + x2 + x3)
struct ProblemFile {
  int num_vars = 0;
  Field field;
  std::optional<std::vector<int>> powers;
  std::vector<Polynomial> ideal;
  std::vector<std::vector<Polynomial>> sequence;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Throws ParseError with the 1-based line and column of the problem.
ProblemFile parse_problem(std::string_view text);
/// Canonical text form; parse_problem(serialize_problem(p)) == p.
std::string serialize_problem(const ProblemFile& problem);

/// One polynomial on a single line, e.g. "x1^2 + 3/2*x1*x2".
Polynomial parse_polynomial(std::string_view text, int n, Field field);
/// "(x1)*(x1 + x2 + x3)": a product of linear forms.
std::vector<Polynomial> parse_factored(std::string_view text, int n, Field field);

}  // namespace splitegh
