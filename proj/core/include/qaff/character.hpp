// Truncated formal characters in the variables e^{-alpha_i}.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>

#include "qaff/cartan.hpp"

namespace qaff {

/// Coefficients indexed by nonnegative weights of height <= depth. Absent
/// weights have coefficient 0.
struct CharacterSeries {
  int depth = 0;
  std::map<Coords, mpz_class> coefficients;

  mpz_class at(const Coords& beta) const;
};

/// prod over positive roots beta of (1 - e^{-beta})^{-[beta]_r}, truncated.
CharacterSeries my_product_series(const CartanData& cd, int r, int depth);

/// Generating function of PBW exponent vectors over the inversion set of
/// t_r^{-1}, each affine root projected along delta -> 0.
CharacterSeries pbw_character(const CartanData& cd, int r, int depth);

struct CharacterComparison {
  bool equal = true;
  /// Smallest-height weight where the series differ.
  std::optional<Coords> first_discrepancy;
  mpz_class left, right;
};

/// Throws std::invalid_argument when truncation degrees differ.
CharacterComparison compare(const CharacterSeries& a, const CharacterSeries& b);

}  // namespace qaff
