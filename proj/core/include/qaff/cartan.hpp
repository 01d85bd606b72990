// Affine Cartan data for the untwisted families, finite root systems and
// affine roots.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qaff {

class CartanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { A, B, C, D, E, F, G };

struct AffineType {
  Family family;
  int rank;

  /// Parses strings like "C2" or "E7"; throws CartanError on bad input.
  static AffineType parse(const std::string& text);
  /// Throws CartanError unless the rank is allowed for the family.
  void validate() const;
  std::string name() const;
  friend bool operator==(const AffineType&, const AffineType&) = default;
};

/// Coordinates over the finite simple roots alpha_1..alpha_n (index k holds alpha_{k+1}).
using Coords = std::vector<int>;

int height(const Coords& x);

/// alpha + k*delta with alpha given in finite coordinates.
struct AffineRoot {
  Coords finite;
  int delta = 0;

  AffineRoot operator+(const AffineRoot& o) const;
  AffineRoot operator-(const AffineRoot& o) const;
  AffineRoot operator-() const;
  AffineRoot operator*(int c) const;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot& a, const AffineRoot& b) {
    if (a.delta != b.delta) return a.delta <=> b.delta;
    return a.finite <=> b.finite;
  }
  std::string str() const;
};

class CartanData {
 public:
  explicit CartanData(AffineType type);

  const AffineType& type() const { return type_; }
  int rank() const { return n_; }
  /// a_{ij} for i, j in {0..n}.
  int a(int i, int j) const { return matrix_[i][j]; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  /// d_i for i in {0..n}; (alpha_i, alpha_i) = 2 d_i.
  int d(int i) const { return d_[i]; }
  const std::vector<int>& symmetrizers() const { return d_; }
  const std::vector<int>& kac_labels() const { return kac_; }
  const std::vector<int>& dual_kac_labels() const { return dual_kac_; }
  /// Lacing number r_g = max d_i.
  int lacing() const { return lacing_; }

  const Coords& theta() const { return theta_; }
  /// Positive roots sorted by height, then coordinates.
  const std::vector<Coords>& positive_roots() const { return roots_; }
  bool is_root(const Coords& x) const;
  bool is_cominuscule(int r) const;

  /// (alpha_i, alpha_j) for i, j in {1..n}.
  int form(int i, int j) const { return d_[i] * matrix_[i][j]; }
  int finite_bilinear(const Coords& x, const Coords& y) const;
  /// delta is in the radical, so only finite parts contribute.
  int bilinear(const AffineRoot& x, const AffineRoot& y) const;
  /// <h_i, x> for i in {0..n}.
  int pairing(int i, const AffineRoot& x) const;
  /// Coefficient of alpha_r in the finite part, i.e. (lambda_r, x).
  int pair_lambda(int r, const AffineRoot& x) const;

  AffineRoot simple(int i) const;
  AffineRoot delta() const;
  Coords unit(int i) const;
  bool is_positive(const AffineRoot& x) const;

  /// Affine coordinates (c_0..c_n) over alpha_0..alpha_n.
  std::vector<int> to_affine_coords(const AffineRoot& x) const;
  AffineRoot from_affine_coords(const std::vector<int>& c) const;

  void check_index(int i, bool allow_zero) const;

 private:
  AffineType type_;
  int n_;
  std::vector<std::vector<int>> matrix_;
  std::vector<int> d_, kac_, dual_kac_;
  int lacing_ = 1;
  Coords theta_;
  std::vector<Coords> roots_;
};

/// Shared immutable instance per type.
const CartanData& cartan_data(const AffineType& type);
const CartanData& cartan_data(const std::string& type);

}  // namespace qaff
