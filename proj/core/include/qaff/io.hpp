// JSON encodings of scalars and shuffle elements. Each encoding round-trips
// exactly through the matching decoder.
#pragma once

#include "json.hpp"

#include "qaff/shuffle.hpp"

namespace qaff {

using json = nlohmann::json;

/// Integers that fit in 64 bits become numbers, larger ones decimal strings.
json rational_to_json(const Rational& c);  // [num, den]
Rational rational_from_json(const json& j);

/// [[exponent, [num, den]], ...] in ascending exponent order.
json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const json& j);

/// {"num": laurent, "den": laurent}
json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j);

/// [[a_power, rat], ...] in ascending a-power order.
json spectral_to_json(const Spectral& x);
Spectral spectral_from_json(const json& j);

/// [{"word": "1,2", "coefficient": "q^-1 + q", "exact": rat}, ...] in
/// canonical term order. Decoding reads "word" and "exact".
json shuffle_to_json(const ShuffleElement& x);
ShuffleElement shuffle_from_json(const json& j);

/// Terms ordered by word length, then letters.
std::vector<std::pair<Word, Rat>> canonical_terms(const ShuffleElement& x);

}  // namespace qaff
