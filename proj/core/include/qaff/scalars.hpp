// Exact scalars: Laurent polynomials in q, rational functions in q, and
// polynomials in the spectral parameter a with rational-function coefficients.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qaff {

using Rational = mpq_class;

class ScalarError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Laurent polynomial in q with rational coefficients. Terms are kept sorted
/// by exponent with no zero coefficients.
class Laurent {
 public:
  using Term = std::pair<int, Rational>;

  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Laurent monomial(int exponent, const Rational& c = 1);
  /// q^e
  static Laurent q(int exponent = 1) { return monomial(exponent); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exp() const;
  int max_exp() const;
  const Rational& leading() const;
  const Rational& trailing() const;
  Rational coeff(int exponent) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  /// Multiply by c q^e.
  Laurent scaled(const Rational& c, int shift = 0) const;
  Laurent shifted(int shift) const { return scaled(1, shift); }
  /// Substitute q -> q^{-1}.
  Laurent bar() const;
  /// Exact quotient; throws ScalarError when d does not divide *this.
  Laurent exact_div(const Laurent& d) const;
  /// Quotient if exact, otherwise false.
  bool try_div(const Laurent& d, Laurent& out) const;

  std::string str() const;

 private:
  friend class Rat;
  void normalize();
  std::vector<Term> terms_;
};

/// Reduced fraction of Laurent polynomials. Canonical form: the denominator has
/// lowest exponent 0 and leading coefficient 1, and gcd(num, den) = 1.
class Rat {
 public:
  Rat() : den_(1) {}
  Rat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(const Laurent& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(Laurent num, Laurent den);

  static Rat q(int exponent = 1) { return Rat(Laurent::q(exponent)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rat inverse() const;
  Rat shifted(int shift) const;
  Rat bar() const;

  std::string str() const;

 private:
  void reduce();
  Laurent num_;
  Laurent den_;
};

/// Polynomial in the spectral parameter a with Rat coefficients.
class Spectral {
 public:
  Spectral() = default;
  Spectral(const Rat& c);  // NOLINT(google-explicit-constructor)
  Spectral(long c) : Spectral(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  static Spectral a_power(int k, const Rat& c = 1);

  const std::map<int, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int k) const;
  /// Largest power of a, or -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  Spectral operator-() const;
  Spectral& operator+=(const Spectral& o);
  Spectral& operator-=(const Spectral& o);
  Spectral& operator*=(const Spectral& o);
  friend Spectral operator+(Spectral x, const Spectral& y) { return x += y; }
  friend Spectral operator-(Spectral x, const Spectral& y) { return x -= y; }
  friend Spectral operator*(Spectral x, const Spectral& y) { return x *= y; }
  friend bool operator==(const Spectral& x, const Spectral& y) { return x.terms_ == y.terms_; }
  /// Inverse of a nonzero a-free element.
  Spectral inverse() const;
  /// Exact quotient by a single term c a^k; throws when not exact.
  Spectral div_monomial(const Spectral& d) const;

  std::string str() const;

 private:
  std::map<int, Rat> terms_;
};

/// [n]_{q^d}
Laurent q_integer(int n, int d);
/// [n]_{q^d}!
Laurent q_factorial(int n, int d);
/// [n choose k]_{q^d}; throws ScalarError when k > n or n < 0.
Laurent q_binomial(int n, int k, int d);

/// Polynomial gcd over Q of two Laurent polynomials, normalized to lowest
/// exponent 0 and leading coefficient 1.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

}  // namespace qaff
