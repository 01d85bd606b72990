#include "qaff/character.hpp"

#include <algorithm>
#include <stdexcept>

#include "qaff/weyl.hpp"

namespace qaff {

namespace {

// Dense index over weights with every coordinate in [0, depth].
struct WeightGrid {
  int n, depth;
  std::size_t size;

  WeightGrid(int n_, int depth_) : n(n_), depth(depth_), size(1) {
    for (int k = 0; k < n; ++k) size *= static_cast<std::size_t>(depth + 1);
  }
  std::size_t index(const Coords& c) const {
    std::size_t idx = 0;
    for (int k = n; k-- > 0;) idx = idx * (depth + 1) + static_cast<std::size_t>(c[k]);
    return idx;
  }
  Coords coords(std::size_t idx) const {
    Coords c(n);
    for (int k = 0; k < n; ++k) {
      c[k] = static_cast<int>(idx % (depth + 1));
      idx /= (depth + 1);
    }
    return c;
  }
};

CharacterSeries to_series(const WeightGrid& g, const std::vector<mpz_class>& dense) {
  CharacterSeries s;
  s.depth = g.depth;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] == 0) continue;
    Coords c = g.coords(i);
    if (height(c) <= g.depth) s.coefficients.emplace(std::move(c), dense[i]);
  }
  return s;
}

}  // namespace

mpz_class CharacterSeries::at(const Coords& beta) const {
  auto it = coefficients.find(beta);
  return it == coefficients.end() ? mpz_class(0) : it->second;
}

CharacterSeries my_product_series(const CartanData& cd, int r, int depth) {
  cd.check_index(r, false);
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  const int n = cd.rank();
  WeightGrid g(n, depth);
  std::vector<Coords> weights;
  for (std::size_t i = 0; i < g.size; ++i) {
    Coords c = g.coords(i);
    if (height(c) <= depth) weights.push_back(std::move(c));
  }
  std::stable_sort(weights.begin(), weights.end(), [](const Coords& a, const Coords& b) { return height(a) < height(b); });
  std::vector<mpz_class> s(g.size, 0);
  s[g.index(Coords(n, 0))] = 1;
  for (const auto& beta : cd.positive_roots()) {
    if (height(beta) > depth) continue;
    // multiply [beta]_r times by the geometric series of e^{-beta}
    for (int m = 0; m < beta[r - 1]; ++m) {
      for (const auto& gamma : weights) {
        Coords prev(n);
        bool ok = true;
        for (int k = 0; k < n; ++k) {
          prev[k] = gamma[k] - beta[k];
          ok = ok && prev[k] >= 0;
        }
        if (ok) s[g.index(gamma)] += s[g.index(prev)];
      }
    }
  }
  return to_series(g, s);
}

CharacterSeries pbw_character(const CartanData& cd, int r, int depth) {
  cd.check_index(r, false);
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  const int n = cd.rank();
  WeightGrid g(n, depth);
  std::vector<Coords> gens;
  for (const auto& beta : inversion_set_closed_form(cd, r))
    if (height(beta.finite) <= depth) gens.push_back(beta.finite);
  // Enumerate exponent vectors directly, one leaf per vector.
  std::vector<std::uint64_t> counts(g.size, 0);
  std::vector<std::size_t> step(gens.size());
  std::vector<int> hts(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    step[k] = g.index(gens[k]);
    hts[k] = height(gens[k]);
  }
  // Coordinates stay within [0, depth] because the total height does.
  auto rec = [&](auto&& self, std::size_t k, std::size_t idx, int h) -> void {
    if (k == gens.size()) {
      ++counts[idx];
      return;
    }
    std::size_t i = idx;
    for (int hh = h; hh <= depth; hh += hts[k], i += step[k]) self(self, k + 1, i, hh);
  };
  rec(rec, 0, 0, 0);
  std::vector<mpz_class> dense(g.size);
  for (std::size_t i = 0; i < g.size; ++i) dense[i] = static_cast<unsigned long>(counts[i]);
  return to_series(g, dense);
}

CharacterComparison compare(const CharacterSeries& a, const CharacterSeries& b) {
  if (a.depth != b.depth) throw std::invalid_argument("character series have different truncation degrees");
  CharacterComparison out;
  std::vector<Coords> keys;
  for (const auto& [k, v] : a.coefficients) keys.push_back(k);
  for (const auto& [k, v] : b.coefficients)
    if (!a.coefficients.count(k)) keys.push_back(k);
  std::stable_sort(keys.begin(), keys.end(), [](const Coords& x, const Coords& y) {
    int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });
  for (const auto& k : keys) {
    mpz_class x = a.at(k), y = b.at(k);
    if (x != y) {
      out.equal = false;
      out.first_discrepancy = k;
      out.left = x;
      out.right = y;
      return out;
    }
  }
  return out;
}

}  // namespace qaff
