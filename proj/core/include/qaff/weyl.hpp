// Affine Weyl group action, translations by fundamental coweights and their
// factorization into a reduced word times a diagram automorphism.
#pragma once

#include <stdexcept>
#include <vector>

#include "qaff/cartan.hpp"

namespace qaff {

class WeylError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// s_{word[0]} s_{word[1]} ... s_{word[l-1]} tau. tau[i] is the image of node i.
struct ExtendedWeylElement {
  std::vector<int> word;
  std::vector<int> tau;

  std::size_t length() const { return word.size(); }
  /// Permutation p with p[j] = tau^{-1}(j).
  std::vector<int> tau_inverse() const;
};

AffineRoot reflect(const CartanData& cd, int i, const AffineRoot& x);
/// Image of x under a diagram automorphism (alpha_i -> alpha_{tau(i)}).
AffineRoot apply_tau(const CartanData& cd, const std::vector<int>& tau, const AffineRoot& x);
/// Image of x under the element.
AffineRoot apply(const CartanData& cd, const ExtendedWeylElement& g, const AffineRoot& x);
/// Image of x under the inverse element.
AffineRoot apply_inverse(const CartanData& cd, const ExtendedWeylElement& g, const AffineRoot& x);

/// t_r^{-1}(x) = x + [x]_r delta on level-zero vectors.
AffineRoot translate_level_zero(const CartanData& cd, int r, const AffineRoot& x);
/// t_r(x) = x - [x]_r delta.
AffineRoot translate_level_zero_inverse(const CartanData& cd, int r, const AffineRoot& x);

/// t_r^{-1} = w_r tau with w_r given by a reduced word (smallest descent first).
ExtendedWeylElement factor_translation(const CartanData& cd, int r);

/// beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}); throws WeylError if the word is not reduced.
std::vector<AffineRoot> inversion_set_from_word(const CartanData& cd, const std::vector<int>& word);
/// { alpha + k delta : alpha positive, 0 <= k < [alpha]_r }, sorted.
std::vector<AffineRoot> inversion_set_closed_form(const CartanData& cd, int r);

bool is_diagram_automorphism(const CartanData& cd, const std::vector<int>& tau);

/// Indices i with l(s_i g) < l(g), resp. l(g s_i) < l(g).
std::vector<int> left_descents(const CartanData& cd, const ExtendedWeylElement& g);
std::vector<int> right_descents(const CartanData& cd, const ExtendedWeylElement& g);

struct LengthDeltas {
  std::vector<int> left;   // l(s_i t_r^{-1}) - l(t_r^{-1})
  std::vector<int> right;  // l(t_r^{-1} s_i) - l(t_r^{-1})
};
LengthDeltas length_deltas(const CartanData& cd, int r);

}  // namespace qaff
