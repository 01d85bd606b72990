#include "qaff/io.hpp"

#include <algorithm>
#include <limits>

namespace qaff {

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

}  // namespace

json rational_to_json(const Rational& c) {
  return json::array({integer_to_json(c.get_num()), integer_to_json(c.get_den())});
}

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [num, den]");
  mpz_class den = integer_from_json(j[1]);
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational c(integer_from_json(j[0]), den);
  c.canonicalize();
  return c;
}

json laurent_to_json(const Laurent& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, rational_to_json(c)}));
  return out;
}

Laurent laurent_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a list of [exponent, [num, den]]");
  Laurent out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("expected [exponent, [num, den]]");
    out += Laurent::monomial(t[0].get<int>(), rational_from_json(t[1]));
  }
  return out;
}

json rat_to_json(const Rat& x) { return {{"num", laurent_to_json(x.num())}, {"den", laurent_to_json(x.den())}}; }

Rat rat_from_json(const json& j) {
  Laurent den = laurent_from_json(j.at("den"));
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return Rat(laurent_from_json(j.at("num")), den);
}

json spectral_to_json(const Spectral& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms()) out.push_back(json::array({k, rat_to_json(c)}));
  return out;
}

Spectral spectral_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a list of [a_power, rat]");
  Spectral out;
  for (const auto& t : j) out += Spectral::a_power(t.at(0).get<int>(), rat_from_json(t.at(1)));
  return out;
}

std::vector<std::pair<Word, Rat>> canonical_terms(const ShuffleElement& x) {
  std::vector<std::pair<Word, Rat>> t(x.terms().begin(), x.terms().end());
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
  });
  return t;
}

json shuffle_to_json(const ShuffleElement& x) {
  json out = json::array();
  for (const auto& [w, c] : canonical_terms(x))
    out.push_back({{"word", word_str(w)}, {"coefficient", c.str()}, {"exact", rat_to_json(c)}});
  return out;
}

ShuffleElement shuffle_from_json(const json& j) {
  ShuffleElement out;
  for (const auto& t : j) out.add(parse_word(t.at("word").get<std::string>()), rat_from_json(t.at("exact")));
  return out;
}

}  // namespace qaff
