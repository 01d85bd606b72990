// Exact linear algebra over Q(q): fraction-free elimination on Laurent entries.
#pragma once

#include <vector>

#include "qaff/scalars.hpp"

namespace qaff {

struct SpanResult {
  bool member = false;
  /// Coefficients expressing the target in the given columns (valid when member).
  std::vector<Rat> coefficients;
};

/// Decides whether target lies in the span of the columns; all vectors share
/// one coordinate system. Denominators are cleared per column, then Bareiss
/// elimination runs on the augmented matrix.
SpanResult solve_in_span(const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& target);

/// Rank of a matrix given as a list of columns.
std::size_t matrix_rank(const std::vector<std::vector<Rat>>& columns);

/// Least common multiple of the denominators (normalized as in Rat).
Laurent common_denominator(const std::vector<Rat>& v);

}  // namespace qaff
