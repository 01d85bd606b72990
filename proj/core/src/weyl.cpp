#include "qaff/weyl.hpp"

#include <algorithm>
#include <set>

namespace qaff {

namespace {

// Images of alpha_0..alpha_n in affine coordinates.
using Action = std::vector<std::vector<int>>;

bool negative_coords(const std::vector<int>& c) {
  bool any = false;
  for (int x : c) {
    if (x > 0) return false;
    any = any || x < 0;
  }
  return any;
}

}  // namespace

std::vector<int> ExtendedWeylElement::tau_inverse() const {
  std::vector<int> inv(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) inv[tau[i]] = static_cast<int>(i);
  return inv;
}

AffineRoot reflect(const CartanData& cd, int i, const AffineRoot& x) {
  return x - cd.simple(i) * cd.pairing(i, x);
}

AffineRoot apply_tau(const CartanData& cd, const std::vector<int>& tau, const AffineRoot& x) {
  auto c = cd.to_affine_coords(x);
  std::vector<int> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[tau[i]] = c[i];
  return cd.from_affine_coords(out);
}

AffineRoot apply(const CartanData& cd, const ExtendedWeylElement& g, const AffineRoot& x) {
  AffineRoot y = apply_tau(cd, g.tau, x);
  for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) y = reflect(cd, *it, y);
  return y;
}

AffineRoot apply_inverse(const CartanData& cd, const ExtendedWeylElement& g, const AffineRoot& x) {
  AffineRoot y = x;
  for (int i : g.word) y = reflect(cd, i, y);
  return apply_tau(cd, g.tau_inverse(), y);
}

AffineRoot translate_level_zero(const CartanData& cd, int r, const AffineRoot& x) {
  return x + cd.delta() * cd.pair_lambda(r, x);
}

AffineRoot translate_level_zero_inverse(const CartanData& cd, int r, const AffineRoot& x) {
  return x - cd.delta() * cd.pair_lambda(r, x);
}

ExtendedWeylElement factor_translation(const CartanData& cd, int r) {
  cd.check_index(r, false);
  const int n = cd.rank();
  // m[j] = g^{-1}(alpha_j) for the residual g, starting from g = t_r^{-1}.
  Action m(n + 1);
  for (int j = 0; j <= n; ++j)
    m[j] = cd.to_affine_coords(translate_level_zero_inverse(cd, r, cd.simple(j)));
  ExtendedWeylElement out;
  for (;;) {
    int found = -1;
    for (int i = 0; i <= n && found < 0; ++i)
      if (negative_coords(m[i])) found = i;
    if (found < 0) break;
    out.word.push_back(found);
    // (g' )^{-1} = g^{-1} s_i
    Action next = m;
    for (int j = 0; j <= n; ++j) {
      int c = cd.a(found, j);
      if (c == 0) continue;
      for (int k = 0; k <= n; ++k) next[j][k] = m[j][k] - c * m[found][k];
    }
    m = std::move(next);
  }
  out.tau.assign(n + 1, -1);
  for (int i = 0; i <= n; ++i) {
    int j = -1;
    for (int k = 0; k <= n; ++k) {
      if (m[i][k] == 1 && j < 0) j = k;
      else if (m[i][k] != 0) j = -2;
    }
    if (j < 0) throw WeylError("internal: residual element is not a diagram automorphism");
    out.tau[j] = i;
  }
  if (!is_diagram_automorphism(cd, out.tau)) throw WeylError("internal: residual permutation does not preserve the Cartan matrix");
  return out;
}

std::vector<AffineRoot> inversion_set_from_word(const CartanData& cd, const std::vector<int>& word) {
  std::vector<AffineRoot> out;
  std::set<AffineRoot> seen;
  for (std::size_t k = 0; k < word.size(); ++k) {
    AffineRoot beta = cd.simple(word[k]);
    for (std::size_t t = k; t-- > 0;) beta = reflect(cd, word[t], beta);
    if (!cd.is_positive(beta))
      throw WeylError("not reduced: root " + beta.str() + " at position " + std::to_string(k + 1) + " is not positive");
    if (!seen.insert(beta).second)
      throw WeylError("not reduced: repeated root " + beta.str() + " at position " + std::to_string(k + 1));
    out.push_back(std::move(beta));
  }
  return out;
}

std::vector<AffineRoot> inversion_set_closed_form(const CartanData& cd, int r) {
  cd.check_index(r, false);
  std::vector<AffineRoot> out;
  for (const auto& alpha : cd.positive_roots())
    for (int k = 0; k < alpha[r - 1]; ++k) out.push_back(AffineRoot{alpha, k});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_diagram_automorphism(const CartanData& cd, const std::vector<int>& tau) {
  const int n = cd.rank();
  if (static_cast<int>(tau.size()) != n + 1) return false;
  std::vector<int> sorted = tau;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i <= n; ++i)
    if (sorted[i] != i) return false;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (cd.a(tau[i], tau[j]) != cd.a(i, j)) return false;
  return true;
}

std::vector<int> left_descents(const CartanData& cd, const ExtendedWeylElement& g) {
  std::vector<int> out;
  for (int i = 0; i <= cd.rank(); ++i)
    if (!cd.is_positive(apply_inverse(cd, g, cd.simple(i)))) out.push_back(i);
  return out;
}

std::vector<int> right_descents(const CartanData& cd, const ExtendedWeylElement& g) {
  std::vector<int> out;
  for (int i = 0; i <= cd.rank(); ++i)
    if (!cd.is_positive(apply(cd, g, cd.simple(i)))) out.push_back(i);
  return out;
}

LengthDeltas length_deltas(const CartanData& cd, int r) {
  ExtendedWeylElement g = factor_translation(cd, r);
  LengthDeltas out;
  auto left = left_descents(cd, g);
  auto right = right_descents(cd, g);
  for (int i = 0; i <= cd.rank(); ++i) {
    out.left.push_back(std::count(left.begin(), left.end(), i) ? -1 : 1);
    out.right.push_back(std::count(right.begin(), right.end(), i) ? -1 : 1);
  }
  return out;
}

}  // namespace qaff
