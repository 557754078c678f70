#pragma once

#include <optional>
#include <vector>

#include "affkl/weight.hpp"

namespace affkl {

// Integer solutions of A x = b: x = particular + sum of integer multiples of kernel vectors.
struct IntegerSolution {
  std::vector<std::int64_t> particular;
  std::vector<std::vector<std::int64_t>> kernel;
};

// Any shape of A. Column Hermite reduction with exact 64-bit arithmetic (throws on overflow).
std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const std::vector<std::int64_t>& b);

// Among all integer solutions, the lexicographically smallest one inside the
// smallest sup-norm box that contains any solution. Unique solutions are returned as is.
std::optional<std::vector<std::int64_t>> canonical_integer_solution(const IntMatrix& a,
                                                                    const std::vector<std::int64_t>& b);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace affkl
