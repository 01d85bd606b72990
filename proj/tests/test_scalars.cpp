#include <gtest/gtest.h>

#include <random>

#include "qaff/scalars.hpp"

using namespace qaff;

namespace {

Laurent q(int e) { return Laurent::q(e); }

Laurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), coef(-3, 3), len(0, 4);
  Laurent x;
  for (int k = len(rng); k > 0; --k) x += Laurent::monomial(exp(rng), coef(rng));
  return x;
}

// Polynomial in z with Laurent coefficients, index = power of z.
using ZPoly = std::vector<Laurent>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST(Laurent, CanonicalTerms) {
  Laurent x = q(1) + q(-1) - q(1);
  EXPECT_EQ(x, q(-1));
  EXPECT_EQ(x.terms().size(), 1u);
  EXPECT_TRUE((q(1) - q(1)).is_zero());
  EXPECT_EQ((q(2) * q(-2)), Laurent(1));
}

TEST(Laurent, Rendering) {
  EXPECT_EQ((q(-1) + q(1)).str(), "q^-1 + q");
  EXPECT_EQ((q(-2) - q(-4)).str(), "-q^-4 + q^-2");
  EXPECT_EQ(Laurent::monomial(3, 2).str(), "2*q^3");
  EXPECT_EQ(Laurent::monomial(1, Rational(1, 2)).str(), "1/2*q");
  EXPECT_EQ(Laurent().str(), "0");
  EXPECT_EQ(Laurent(-1).str(), "-1");
}

TEST(Laurent, RingAxiomsOnRandomSample) {
  std::mt19937 rng(20240601);
  for (int t = 0; t < 200; ++t) {
    Laurent x = random_laurent(rng), y = random_laurent(rng), z = random_laurent(rng);
    EXPECT_EQ((x + y) * z, x * z + y * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x + y, y + x);
  }
}

TEST(Laurent, ExactDivision) {
  Laurent num = Laurent(1) - q(4), den = Laurent(1) - q(2);
  EXPECT_EQ(num.exact_div(den), Laurent(1) + q(2));
  Laurent out;
  EXPECT_FALSE(q(1).try_div(Laurent(1) + q(1), out));
  EXPECT_THROW((void)q(1).exact_div(Laurent(1) + q(1)), ScalarError);
}

TEST(Rat, CanonicalForm) {
  Rat x(Laurent(1) - q(4), Laurent(1) - q(2));
  EXPECT_TRUE(x.is_laurent());
  EXPECT_EQ(x, Rat(Laurent(1) + q(2)));
  // denominator normalized to lowest exponent 0 and leading coefficient 1
  Rat y(Laurent(2), q(-1) * 4 + q(1) * 4);
  EXPECT_EQ(y.den().min_exp(), 0);
  EXPECT_EQ(y.den().leading(), 1);
  EXPECT_EQ(y * Rat(q(-1) + q(1)), Rat(Rational(1, 2)));
  // reduction is idempotent
  Rat z(y.num(), y.den());
  EXPECT_EQ(z, y);
}

TEST(Rat, FieldOperations) {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng), d = random_laurent(rng);
    if (b.is_zero() || d.is_zero()) continue;
    Rat x(a, b), y(c, d);
    EXPECT_EQ((x + y) - y, x);
    EXPECT_EQ(x * (y + Rat(1)), x * y + x);
    if (!y.is_zero()) EXPECT_EQ((x * y) / y, x);
    if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), Rat(1));
  }
  EXPECT_THROW((void)Rat(0).inverse(), ScalarError);
  EXPECT_THROW(Rat(Laurent(1), Laurent()), ScalarError);
}

TEST(Rat, Rendering) {
  Rat x(Laurent(1), q(-1) + q(1));
  EXPECT_EQ(x.str(), "(q)/(1 + q^2)");
  EXPECT_EQ(Rat(q(-1)).str(), "q^-1");
}

TEST(Spectral, Arithmetic) {
  Spectral a = Spectral::a_power(1);
  Spectral x = Spectral(Rat(2)) + a * Spectral(Rat(q(1)));
  EXPECT_EQ((x * a).degree(), 2);
  EXPECT_EQ((x - x).degree(), -1);
  EXPECT_EQ((a * a).str(), "a^2");
  EXPECT_EQ(x.str(), "2 + (q)*a");
  Spectral y = Spectral::a_power(2, Rat(q(3)));
  EXPECT_EQ(y.div_monomial(Spectral::a_power(1, Rat(q(1)))), Spectral::a_power(1, Rat(q(2))));
  EXPECT_THROW((void)Spectral::a_power(-1), ScalarError);
}

TEST(QCombinatorics, Integers) {
  EXPECT_EQ(q_integer(2, 1), q(1) + q(-1));
  EXPECT_EQ(q_integer(1, 3), Laurent(1));
  EXPECT_EQ(q_integer(3, 2), q(4) + Laurent(1) + q(-4));
  for (int n = 0; n <= 6; ++n)
    for (int d = 1; d <= 3; ++d) {
      Laurent num = q(d * n) - q(-d * n), den = q(d) - q(-d);
      EXPECT_EQ(q_integer(n, d), num.exact_div(den)) << n << " " << d;
    }
}

TEST(QCombinatorics, Binomials) {
  EXPECT_EQ(q_binomial(2, 1, 1), q(1) + q(-1));
  EXPECT_EQ(q_binomial(2, 0, 1), Laurent(1));
  EXPECT_THROW((void)q_binomial(2, 3, 1), ScalarError);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      for (int d = 1; d <= 3; ++d) EXPECT_EQ(q_binomial(n, k, d), q_binomial(n, n - k, d));
}

TEST(QCombinatorics, ProductExpansions) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 6; ++n)
      for (int sign : {1, -1}) {
        ZPoly lhs{Laurent(1)};
        for (int k = 0; k < n; ++k) lhs = zmul(lhs, ZPoly{Laurent(1), -q(sign * 2 * k * d)});
        ZPoly rhs(n + 1);
        for (int k = 0; k <= n; ++k) {
          Laurent c = q(sign * (n - 1) * k * d) * q_binomial(n, k, d);
          rhs[k] = k % 2 ? -c : c;
        }
        EXPECT_EQ(lhs, rhs) << "n=" << n << " d=" << d << " sign=" << sign;
      }
  // the displayed n = 2 case
  ZPoly two{Laurent(1), -q(1) * q_binomial(2, 1, 1), q(2)};
  EXPECT_EQ(two, zmul({Laurent(1), Laurent(-1)}, {Laurent(1), -q(2)}));
}

TEST(QCombinatorics, Gcd) {
  Laurent a = (Laurent(1) + q(1)) * (Laurent(1) - q(3)), b = (Laurent(1) + q(1)) * q(-5);
  EXPECT_EQ(laurent_gcd(a, b), Laurent(1) + q(1));
}
