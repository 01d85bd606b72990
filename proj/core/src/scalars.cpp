#include "qaff/scalars.hpp"

#include <algorithm>
#include <sstream>

namespace qaff {

namespace {

using Dense = std::vector<Rational>;  // index = degree

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const Laurent& a, int shift) {
  Dense out;
  if (a.is_zero()) return out;
  out.assign(a.max_exp() - shift + 1, Rational(0));
  for (const auto& [e, c] : a.terms()) out[e - shift] = c;
  return out;
}

Laurent from_dense(const Dense& p, int shift) {
  Laurent out;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0) out += Laurent::monomial(static_cast<int>(k) + shift, p[k]);
  return out;
}

// Long division of dense polynomials; returns quotient, leaves remainder in a.
Dense poly_divmod(Dense& a, const Dense& b) {
  Dense quot;
  trim(a);
  if (a.size() < b.size()) return quot;
  quot.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    Rational c = a[k] / lead;
    std::size_t off = k - (b.size() - 1);
    quot[off] = c;
    for (std::size_t t = 0; t < b.size(); ++t) a[off + t] -= c * b[t];
    if (k == 0) break;
  }
  trim(a);
  trim(quot);
  return quot;
}

std::string rational_str(const Rational& c) { return c.get_str(); }

}  // namespace

Laurent::Laurent(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

Laurent::Laurent(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

Laurent Laurent::monomial(int exponent, const Rational& c) {
  Laurent out;
  if (c != 0) out.terms_.emplace_back(exponent, c);
  return out;
}

bool Laurent::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

int Laurent::min_exp() const {
  if (terms_.empty()) throw ScalarError("min_exp of zero Laurent polynomial");
  return terms_.front().first;
}

int Laurent::max_exp() const {
  if (terms_.empty()) throw ScalarError("max_exp of zero Laurent polynomial");
  return terms_.back().first;
}

const Rational& Laurent::leading() const {
  if (terms_.empty()) throw ScalarError("leading coefficient of zero");
  return terms_.back().second;
}

const Rational& Laurent::trailing() const {
  if (terms_.empty()) throw ScalarError("trailing coefficient of zero");
  return terms_.front().second;
}

Rational Laurent::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

void Laurent::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second == 0; }), out.end());
  terms_ = std::move(out);
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (c != 0) out.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1) return b.scaled(a.terms_[0].second, a.terms_[0].first);
  if (b.terms_.size() == 1) return a.scaled(b.terms_[0].second, b.terms_[0].first);
  const int lo = a.min_exp() + b.min_exp();
  const int hi = a.max_exp() + b.max_exp();
  Dense acc(hi - lo + 1, Rational(0));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb - lo] += ca * cb;
  Laurent out;
  for (int k = 0; k <= hi - lo; ++k)
    if (acc[k] != 0) out.terms_.emplace_back(k + lo, std::move(acc[k]));
  return out;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::scaled(const Rational& c, int shift) const {
  Laurent out;
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [e, v] : terms_) out.terms_.emplace_back(e + shift, v * c);
  return out;
}

Laurent Laurent::bar() const {
  Laurent out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.terms_.emplace_back(-it->first, it->second);
  return out;
}

bool Laurent::try_div(const Laurent& d, Laurent& out) const {
  if (d.is_zero()) throw ScalarError("division by zero");
  if (is_zero()) {
    out = Laurent();
    return true;
  }
  if (d.is_monomial()) {
    out = scaled(1 / d.leading(), -d.min_exp());
    return true;
  }
  Dense a = to_dense(*this, min_exp());
  Dense b = to_dense(d, d.min_exp());
  Dense quot = poly_divmod(a, b);
  if (!a.empty()) return false;
  out = from_dense(quot, min_exp() - d.min_exp());
  return true;
}

Laurent Laurent::exact_div(const Laurent& d) const {
  Laurent out;
  if (!try_div(d, out)) throw ScalarError("inexact division " + str() + " / " + d.str());
  return out;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string term;
    Rational mag = abs(c);
    bool neg = c < 0;
    if (e == 0) {
      term = rational_str(mag);
    } else {
      std::string qpart = e == 1 ? "q" : "q^" + std::to_string(e);
      term = mag == 1 ? qpart : rational_str(mag) + "*" + qpart;
    }
    if (first) {
      out += neg ? "-" + term : term;
      first = false;
    } else {
      out += neg ? " - " + term : " + " + term;
    }
  }
  return out;
}

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return Laurent(1);
  Dense x = a.is_zero() ? Dense{} : to_dense(a, a.min_exp());
  Dense y = b.is_zero() ? Dense{} : to_dense(b, b.min_exp());
  trim(x);
  trim(y);
  while (!y.empty()) {
    poly_divmod(x, y);
    std::swap(x, y);
  }
  // strip factors of q (units in the Laurent ring)
  std::size_t low = 0;
  while (low < x.size() && x[low] == 0) ++low;
  x.erase(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(low));
  Rational lead = x.back();
  for (auto& c : x) c /= lead;
  return from_dense(x, 0);
}

Laurent q_integer(int n, int d) {
  if (d <= 0) throw ScalarError("q_integer needs d > 0");
  if (n == 0) return {};
  int m = n < 0 ? -n : n;
  Laurent out;
  for (int k = 0; k < m; ++k) out += Laurent::q(d * (m - 1 - 2 * k));
  return n < 0 ? -out : out;
}

Laurent q_factorial(int n, int d) {
  if (n < 0) throw ScalarError("q_factorial of negative integer");
  Laurent out(1);
  for (int k = 2; k <= n; ++k) out *= q_integer(k, d);
  return out;
}

Laurent q_binomial(int n, int k, int d) {
  if (n < 0 || k < 0 || k > n)
    throw ScalarError("q_binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") out of range");
  Laurent num(1), den(1);
  for (int t = 0; t < k; ++t) {
    num *= q_integer(n - t, d);
    den *= q_integer(t + 1, d);
  }
  return num.exact_div(den);
}

// Rat

Rat::Rat(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

void Rat::reduce() {
  if (den_.is_zero()) throw ScalarError("zero denominator");
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    num_ = num_.scaled(1 / den_.leading(), -den_.min_exp());
    den_ = Laurent(1);
    return;
  }
  Laurent g = laurent_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Rational lead = den_.leading();
  int shift = den_.min_exp();
  den_ = den_.scaled(1 / lead, -shift);
  num_ = num_.scaled(1 / lead, -shift);
}

Rat Rat::operator-() const {
  Rat out = *this;
  out.num_ = -out.num_;
  return out;
}

Rat& Rat::operator+=(const Rat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) reduce();
    else if (num_.is_zero()) den_ = Laurent(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  if (is_zero() || o.is_zero()) return *this = Rat();
  num_ *= o.num_;
  if (o.den_.is_one()) {
    if (!den_.is_one()) reduce();
    return *this;
  }
  den_ *= o.den_;
  reduce();
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw ScalarError("inverse of zero");
  return Rat(den_, num_);
}

Rat& Rat::operator/=(const Rat& o) { return *this *= o.inverse(); }

Rat Rat::shifted(int shift) const {
  Rat out = *this;
  out.num_ = out.num_.shifted(shift);
  return out;
}

Rat Rat::bar() const { return Rat(num_.bar(), den_.bar()); }

std::string Rat::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// Spectral

Spectral::Spectral(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

Spectral Spectral::a_power(int k, const Rat& c) {
  if (k < 0) throw ScalarError("negative power of a");
  Spectral out;
  if (!c.is_zero()) out.terms_.emplace(k, c);
  return out;
}

Rat Spectral::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rat() : it->second;
}

Spectral Spectral::operator-() const {
  Spectral out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

Spectral& Spectral::operator+=(const Spectral& o) {
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Spectral& Spectral::operator-=(const Spectral& o) { return *this += -o; }

Spectral& Spectral::operator*=(const Spectral& o) {
  Spectral out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) out += a_power(k1 + k2, c1 * c2);
  return *this = std::move(out);
}

Spectral Spectral::inverse() const {
  if (terms_.size() != 1 || terms_.begin()->first != 0)
    throw ScalarError("only nonzero a-free spectral scalars are invertible");
  return Spectral(terms_.begin()->second.inverse());
}

Spectral Spectral::div_monomial(const Spectral& d) const {
  if (d.terms_.size() != 1) throw ScalarError("divisor is not a single a-power term");
  const auto& [k, c] = *d.terms_.begin();
  Spectral out;
  Rat inv = c.inverse();
  for (const auto& [e, v] : terms_) {
    if (e < k) throw ScalarError("inexact division by a power of a");
    out.terms_.emplace(e - k, v * inv);
  }
  return out;
}

std::string Spectral::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string term;
    std::string apart = k == 1 ? "a" : "a^" + std::to_string(k);
    if (k == 0)
      term = c.str();
    else if (c.is_one())
      term = apart;
    else
      term = "(" + c.str() + ")*" + apart;
    if (!first) out += " + ";
    out += term;
    first = false;
  }
  return out;
}

}  // namespace qaff
