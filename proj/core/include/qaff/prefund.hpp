// The module M_{r,a} realized in the shuffle algebra for cominuscule r:
// Borel actions, Serre relations, affine root vectors and l-weights.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaff/lyndon.hpp"

namespace qaff {

class ExplicitSource;

class UnsupportedCase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Sign { negative, positive };
std::string sign_name(Sign s);
Sign parse_sign(const std::string& s);

/// Element of M_{r,a}: for each power of a, a combination of words. The
/// vacuum vector is the empty word.
class ModuleVector {
 public:
  ModuleVector() = default;
  explicit ModuleVector(ShuffleElement x, int a_power = 0);
  static ModuleVector vacuum() { return ModuleVector(ShuffleElement::one()); }

  const std::map<int, ShuffleElement>& parts() const { return parts_; }
  ShuffleElement part(int a_power) const;
  bool is_zero() const { return parts_.empty(); }

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Spectral& c);
  friend ModuleVector operator+(ModuleVector x, const ModuleVector& y) { return x += y; }
  friend ModuleVector operator-(ModuleVector x, const ModuleVector& y) { return x -= y; }
  friend ModuleVector operator*(ModuleVector x, const Spectral& c) { return x *= c; }
  friend ModuleVector operator*(const Spectral& c, ModuleVector x) { return x *= c; }
  friend bool operator==(const ModuleVector& x, const ModuleVector& y) { return x.parts_ == y.parts_; }

  /// Returns c with *this == c * base for an a-free base, or nullopt.
  std::optional<Spectral> ratio_to(const ShuffleElement& base) const;

 private:
  void set(int a_power, ShuffleElement x);
  std::map<int, ShuffleElement> parts_;
};

/// e_{ops[0]} e_{ops[1]} ... e_{ops[last]} times a scalar; the last index acts first.
struct EMonomial {
  std::vector<int> ops;
  Rat prefactor;
};

struct SerreFailure {
  int i = 0, j = 0;
  std::size_t basis_index = 0;
  ModuleVector defect;
};

struct SerreReport {
  bool pass = true;
  std::size_t checks = 0;
  std::size_t basis_size = 0;
  std::vector<SerreFailure> failures;
};

struct ClosureFailure {
  int i = 0;
  std::size_t basis_index = 0;
  std::string reason;
};

struct ClosureReport {
  bool pass = true;
  std::size_t checks = 0;
  std::size_t basis_size = 0;
  std::vector<ClosureFailure> failures;
};

enum class FitKind { geometric, linear, other };
std::string fit_name(FitKind f);

struct LWeightSeries {
  /// psi[0] = 1, psi[k] = Psi_{r,k}.
  std::vector<Spectral> psi;
  FitKind fit = FitKind::other;
  /// geometric: Psi_{k+1} = ratio * Psi_k; linear: unused.
  Spectral ratio;
  /// E_{alpha_r} E_{delta - alpha_r} 1 = b 1.
  Spectral b;
  /// ratio == b (q_r^{-3} - q_r^{-1}) (negative realization).
  bool consistency = false;
  /// Psi_r(z) = 1/(1 - a c_r z) or 1 - a c_r z, with o(r) = +1.
  std::optional<Rat> c_r;
};

/// One realization of M_{r,a}. Root vectors over Delta^+(w_r) use the
/// alphabet of Alphabet::module_default. The 0-action multiplies by x_0, the
/// dual root vector of theta rescaled by theta_normalization().
class Realization {
 public:
  Realization(const CartanData& cd, int r, Sign sign);

  const CartanData& cartan() const { return cd_; }
  int r() const { return r_; }
  Sign sign() const { return sign_; }
  const ShuffleAlgebra& algebra() const { return *alg_; }
  const RootVectors& root_vectors() const { return *rv_; }
  /// x_0, expanded on first use.
  const ShuffleElement& theta_vector() const;
  /// Coefficient of w in x_0 without expanding it.
  Rat theta_coefficient(const Word& w) const;
  /// 1/(q^{-1}+q) for B, q for C, 1 otherwise.
  const Rat& theta_normalization() const { return kappa_; }
  /// q^{d_0}
  Rat q0() const { return Rat::q(cd_.d(0)); }
  int tau0() const { return tau0_; }
  /// Delta^+(w_r) in increasing good-Lyndon order.
  const std::vector<Coords>& pbw_roots() const { return roots_; }

  /// Ordered products of normalized powers, one per exponent vector of height <= depth.
  std::vector<ShuffleElement> basis_elements(int depth) const;
  std::vector<ModuleVector> basis(int depth) const;
  /// Exponent vectors over pbw_roots() with total weight gamma.
  std::vector<std::vector<int>> exponent_vectors(const Coords& gamma) const;
  /// F(beta)^{*c} rescaled so that l(beta)^c has coefficient lead^c, where
  /// lead is the coefficient of l(beta) in F(beta).
  const ShuffleElement& normalized_power(const Coords& beta, int c) const;
  ShuffleElement monomial(const std::vector<int>& exponents) const;

  /// e_i without the factor a (positive realization keeps its q-power).
  ShuffleElement e_plain(int i, const ShuffleElement& v) const;
  ModuleVector act_e(int i, const ModuleVector& v) const;
  ModuleVector act_k(int i, const ModuleVector& v) const;
  /// Exponent of q by which k_i acts on a word of the given word weight.
  int k_exponent(int i, const Coords& word_weight) const;

  /// R(i; e_i, e_j) applied to v, expanded explicitly.
  ModuleVector serre_defect(int i, int j, const ModuleVector& v) const;
  /// Same relation decided through coefficients on good words only.
  bool serre_vanishes(int i, int j, const ShuffleElement& v) const;
  SerreReport serre_check(int depth, bool stop_at_first = false) const;

  EMonomial e_monomial() const;
  /// E_{k delta - alpha_r}(v) for v in span{1, f_r} (k = 1) or span{1} (k >= 2).
  ModuleVector e_imaginary(int k, const ModuleVector& v) const;
  /// Psi_{i,k} with o(r) = +1; for i != r it is zero because the weight space
  /// of alpha_i is empty, which is checked.
  Spectral psi_coefficient(int k) const;
  Spectral psi_coefficient(int i, int k) const;
  LWeightSeries ell_weight(int kmax) const;

  ClosureReport closure_check(int depth) const;

 private:
  bool serre_vanishes_with(int i, int j, const ShuffleElement& v,
                           const std::shared_ptr<ExplicitSource>& x0) const;
  ModuleVector e_imaginary_one(const ModuleVector& v) const;
  ShuffleElement apply_ops(const std::vector<int>& ops, const ShuffleElement& v) const;
  std::vector<std::vector<int>> exponent_vectors_up_to(int depth) const;
  bool in_weight_span(const ShuffleElement& target, std::string& reason) const;

  const CartanData& cd_;
  int r_;
  Sign sign_;
  std::unique_ptr<ShuffleAlgebra> alg_;
  std::unique_ptr<RootVectors> rv_;
  Rat kappa_;
  mutable std::once_flag x0_once_;
  mutable ShuffleElement x0_;
  int tau0_ = 0;
  std::vector<Coords> roots_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Coords, int>, std::shared_ptr<const ShuffleElement>> powers_;
  mutable std::map<int, ModuleVector> e_imag_cache_;
};

}  // namespace qaff
