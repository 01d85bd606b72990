// Acceptance suite: one PASS/FAIL line per criterion. `acceptance k` runs
// criterion k only; without arguments all eight run.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qaff/character.hpp"
#include "qaff/prefund.hpp"
#include "qaff/weyl.hpp"

using namespace qaff;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      if (notes.size() < 12) notes.push_back(what);
    }
  }
};

std::string coords_str(const Coords& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  os << ")";
  return os.str();
}

std::string seq_str(const std::vector<int>& v) { return coords_str(v); }

std::vector<AffineRoot> sorted(std::vector<AffineRoot> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Rat qp(int e) { return Rat(Laurent::q(e)); }

Rat rpow(const Rat& x, int k) {
  Rat out(1);
  for (int t = 0; t < k; ++t) out *= x;
  return out;
}

Rat sgn(int e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

// ---------------------------------------------------------------- criterion 1

Outcome criterion1() {
  Outcome o;
  struct Case {
    const char* type;
    int r;
    std::vector<int> word;
    std::vector<int> tau;
    std::vector<AffineRoot> inversions;
  };
  auto R = [](Coords c, int d = 0) { return AffineRoot{std::move(c), d}; };
  const std::vector<Case> cases = {
      {"A2", 1, {1, 2}, {2, 0, 1}, {R({1, 0}), R({1, 1})}},
      {"A2", 2, {2, 1}, {1, 2, 0}, {R({0, 1}), R({1, 1})}},
      {"C2", 1, {1, 2, 1, 0}, {0, 1, 2}, {R({1, 0}), R({2, 1}), R({1, 1}), R({2, 1}, 1)}},
      {"C2", 2, {2, 1, 2}, {2, 1, 0}, {R({0, 1}), R({1, 1}), R({2, 1})}},
      {"G2", 1, {1, 2, 1, 2, 1, 0}, {0, 1, 2}, {R({1, 0}), R({1, 1}), R({2, 3}), R({1, 2}), R({1, 3}), R({2, 3}, 1)}},
      {"G2",
       2,
       {2, 1, 2, 1, 2, 0, 1, 2, 1, 0},
       {0, 1, 2},
       {R({0, 1}), R({1, 3}), R({1, 2}), R({2, 3}), R({1, 1}), R({1, 3}, 1), R({2, 3}, 1), R({1, 2}, 1), R({1, 3}, 2),
        R({2, 3}, 2)}},
  };
  for (const auto& c : cases) {
    const CartanData& cd = cartan_data(c.type);
    ExtendedWeylElement g = factor_translation(cd, c.r);
    std::string tag = std::string(c.type) + " r=" + std::to_string(c.r);
    o.expect(g.length() == c.word.size(), tag + ": length " + std::to_string(g.length()));
    o.expect(g.tau == c.tau, tag + ": tau " + seq_str(g.tau) + " expected " + seq_str(c.tau));
    auto computed = sorted(inversion_set_from_word(cd, g.word));
    o.expect(computed == sorted(inversion_set_from_word(cd, c.word)), tag + ": word " + seq_str(g.word) + " differs beyond braid moves");
    o.expect(computed == sorted(c.inversions), tag + ": inversion set differs from the listed set");
    o.expect(computed == inversion_set_closed_form(cd, c.r), tag + ": closed form differs");
  }
  return o;
}

// ---------------------------------------------------------------- criterion 2

std::vector<int> interval(int i, int j) {
  std::vector<int> out;
  if (i <= j)
    for (int k = i; k <= j; ++k) out.push_back(k);
  else
    for (int k = i; k >= j; --k) out.push_back(k);
  return out;
}

void append(std::vector<int>& a, const std::vector<int>& b) { a.insert(a.end(), b.begin(), b.end()); }

std::vector<int> d_word_r_n(int n) {
  std::vector<int> w;
  for (int k = 1; k <= n - 1; ++k) {
    if (n % 2 == 0 && k == n - 1)
      w.push_back(n);
    else if (k % 2 == 1) {
      w.push_back(n);
      if (k <= n - 2) append(w, interval(n - 2, k));
    } else {
      append(w, interval(n - 1, k));
    }
  }
  return w;
}

std::vector<int> remark_word(Family f, int n, int r) {
  std::vector<int> w;
  switch (f) {
    case Family::A:
      for (int j = 0; j < r; ++j) append(w, interval(r - j, n - j));
      break;
    case Family::B:
      append(w, interval(1, n));
      append(w, interval(n - 1, 1));
      break;
    case Family::C:
      for (int k = n; k >= 1; --k) append(w, interval(n, n - k + 1));
      break;
    case Family::D:
      if (r == 1) {
        append(w, interval(1, n));
        append(w, interval(n - 2, 1));
      } else {
        w = d_word_r_n(n);
        if (r == n - 1)
          for (int& x : w) x = x == n ? n - 1 : (x == n - 1 ? n : x);
      }
      break;
    case Family::E:
      if (n == 6 && r == 1) w = {1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6};
      if (n == 6 && r == 6) w = {6, 5, 4, 3, 1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1};
      if (n == 7) w = {7, 6, 5, 4, 3, 1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7};
      break;
    default:
      break;
  }
  return w;
}

Outcome criterion2() {
  Outcome o;
  std::vector<std::pair<std::string, int>> cases;
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= n; ++r) cases.emplace_back("A" + std::to_string(n), r);
  for (int n = 3; n <= 5; ++n) cases.emplace_back("B" + std::to_string(n), 1);
  for (int n = 2; n <= 5; ++n) cases.emplace_back("C" + std::to_string(n), n);
  for (int n = 4; n <= 6; ++n)
    for (int r : {1, n - 1, n}) cases.emplace_back("D" + std::to_string(n), r);
  cases.emplace_back("E6", 1);
  cases.emplace_back("E6", 6);
  cases.emplace_back("E7", 7);
  for (const auto& [name, r] : cases) {
    const CartanData& cd = cartan_data(name);
    std::string tag = name + " r=" + std::to_string(r);
    ExtendedWeylElement g = factor_translation(cd, r);
    std::vector<int> remark = remark_word(cd.type().family, cd.rank(), r);
    std::vector<AffineRoot> expected;
    try {
      expected = sorted(inversion_set_from_word(cd, remark));
    } catch (const WeylError& e) {
      o.expect(false, tag + ": listed word " + seq_str(remark) + " is not reduced (" + e.what() + ")");
      continue;
    }
    o.expect(sorted(inversion_set_from_word(cd, g.word)) == expected,
             tag + ": computed " + seq_str(g.word) + " vs listed " + seq_str(remark));
    o.expect(!g.word.empty() && g.word.front() == r, tag + ": does not start with s_r");
    o.expect(!g.word.empty() && g.word.back() == g.tau[0], tag + ": does not end with s_tau(0)");
  }
  return o;
}

// ---------------------------------------------------------------- criterion 3

Outcome criterion3() {
  Outcome o;
  for (const char* name : {"A1", "A2", "A3", "A4", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"}) {
    const CartanData& cd = cartan_data(name);
    for (int r = 1; r <= cd.rank(); ++r) {
      CharacterComparison c = compare(pbw_character(cd, r, 8), my_product_series(cd, r, 8));
      std::string tag = std::string(name) + " r=" + std::to_string(r);
      if (!c.equal && c.first_discrepancy)
        tag += ": first discrepancy at " + coords_str(*c.first_discrepancy) + " pbw " + c.left.get_str() + " product " +
               c.right.get_str();
      o.expect(c.equal, tag);
    }
  }
  return o;
}

// ---------------------------------------------------------------- criterion 4

Coords root_interval(int n, int i, int j) {
  Coords c(n, 0);
  for (int k = i; k <= j; ++k) c[k - 1] += 1;
  return c;
}

Coords add(Coords a, const Coords& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

std::map<Coords, ShuffleElement> listed_b(int n) {
  std::map<Coords, ShuffleElement> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out[root_interval(n, i, j)] = ShuffleElement::word(make_word(interval(i, j)));
  Rat two(Laurent::q(-1) + Laurent::q(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> w = interval(i, n);
      append(w, interval(n, j));
      out[add(root_interval(n, i, n), root_interval(n, j, n))] = ShuffleElement::word(make_word(w), two);
    }
  return out;
}

std::map<Coords, ShuffleElement> listed_c(const ShuffleAlgebra& alg, int n) {
  std::map<Coords, ShuffleElement> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out[root_interval(n, i, j)] = ShuffleElement::word(make_word(interval(j, i)));
  for (int j = 1; j < n; ++j)
    for (int k = j; k < n; ++k) {
      ShuffleElement p = alg.product(ShuffleElement::word(make_word(interval(n - 1, j))),
                                     ShuffleElement::word(make_word(interval(n - 1, k))));
      out[add(root_interval(n, j, n), root_interval(n, k, n - 1))] = concat(ShuffleElement::word(make_word({n})), p);
    }
  return out;
}

Outcome criterion4() {
  Outcome o;
  Rat two(Laurent::q(-1) + Laurent::q(1));
  for (const char* name : {"B3", "B4", "C2", "C3"}) {
    const CartanData& cd = cartan_data(name);
    const int n = cd.rank();
    ShuffleAlgebra alg(cd);
    auto listed = cd.type().family == Family::B ? listed_b(n) : listed_c(alg, n);
    o.expect(listed.size() == cd.positive_roots().size(), std::string(name) + ": listed vectors do not cover the roots");
    for (const auto& beta : cd.positive_roots()) {
      ShuffleElement f = dual_root_vector(alg, beta);
      o.expect(listed.count(beta) && f == listed.at(beta), std::string(name) + ": vector of " + coords_str(beta));
      for (int i = 1; i <= n; ++i) {
        ShuffleElement d = derive(i, f);
        if (d.is_zero()) continue;
        Coords less = beta, twice = beta;
        less[i - 1] -= 1;
        twice[i - 1] -= 2;
        bool doubling = cd.is_root(twice);
        ShuffleElement expected = height(less) == 0 ? ShuffleElement::one() : dual_root_vector(alg, less);
        if (doubling) expected *= two;
        if (d == expected) {
          o.expect(true, "");
          continue;
        }
        std::string what = std::string(name) + ": e'_" + std::to_string(i) + " F" + coords_str(beta);
        Rat c;
        if (d.proportional_to(expected * (doubling ? two.inverse() : Rat(1)), c))
          what += " = (" + c.str() + ") F" + coords_str(less) + ", expected " + (doubling ? "(q^-1 + q)" : "1");
        o.expect(false, what);
      }
    }
  }
  return o;
}

// ---------------------------------------------------------------- criterion 5

const std::vector<std::pair<const char*, int>> kSuite = {{"A2", 1}, {"A3", 2}, {"B3", 1}, {"C2", 2},
                                                         {"C3", 3}, {"D4", 1}, {"D4", 4}};

Outcome criterion5() {
  Outcome o;
  for (const auto& [name, r] : kSuite)
    for (Sign s : {Sign::negative, Sign::positive}) {
      Realization m(cartan_data(name), r, s);
      SerreReport rep = m.serre_check(5);
      std::string tag = std::string(name) + " r=" + std::to_string(r) + " " + sign_name(s) + ": " +
                        std::to_string(rep.failures.size()) + " failures of " + std::to_string(rep.checks);
      o.expect(rep.pass, tag);
    }
  return o;
}

// ---------------------------------------------------------------- criterion 6

struct TableCase {
  const char* type;
  int r;
};

std::vector<TableCase> table_cases() {
  std::vector<TableCase> out;
  for (const char* a : {"A2", "A3", "A4"}) {
    int n = a[1] - '0';
    for (int r = 1; r <= n; ++r) out.push_back({a, r});
  }
  out.push_back({"B3", 1});
  out.push_back({"B4", 1});
  out.push_back({"C2", 2});
  out.push_back({"C3", 3});
  out.push_back({"D4", 1});
  out.push_back({"D4", 4});
  out.push_back({"D5", 1});
  out.push_back({"D5", 5});
  out.push_back({"E6", 1});
  out.push_back({"E6", 6});
  out.push_back({"E7", 7});
  return out;
}

// Coefficient of a^k f_r in E_{k delta - alpha_r}(1), negative realization.
Rat table_one(Family f, int n, int k) {
  Rat qq = qp(1) - qp(-1), two = qp(-1) + qp(1);
  switch (f) {
    case Family::A:
      return sgn(k * n - 1) * qp(-k * (n + 1) + 2) * rpow(qq, k - 1);
    case Family::B:
      return sgn(k - 1) * rpow(qp(-2 * n) * two, k) * qp(-2 * (k - 1)) * rpow(Rat(1) - qp(-4), k - 1);
    case Family::C:
      return sgn(k - 1) * qp((-n + 1) * k) * qp(-2 * (k - 1)) * rpow(Rat(1) - qp(-4), k - 1);
    case Family::D:
      return sgn(k - 1) * qp(-2 * k * (n - 1) + 2) * rpow(qq, k - 1);
    case Family::E: {
      int e = n == 6 ? -10 : -16;
      return sgn(k - 1) * qp(e * k) * qp(-k + 1) * rpow(Rat(1) - qp(-2), k - 1);
    }
    default:
      return Rat(0);
  }
}

// Coefficient of a f_r^2 in E_{delta - alpha_r}(f_r).
Rat table_two(Family f, int n, Sign s) {
  Rat two = qp(-1) + qp(1);
  bool neg = s == Sign::negative;
  switch (f) {
    case Family::A:
      return neg ? sgn(n - 1) * qp(-n + 1) : rpow(-qp(-1), n - 1) * qp(2);
    case Family::B:
      return neg ? qp(-2 * n) * two : qp(-2 * n + 2) * two;
    case Family::C:
      return neg ? qp(-n + 1) : qp(-n + 5);
    case Family::D:
      return neg ? qp(-2 * n + 4) : qp(-2 * n + 6);
    case Family::E:
      if (n == 6) return neg ? qp(-10) : qp(-8);
      return neg ? qp(-16) : qp(-14);
    default:
      return Rat(0);
  }
}

Outcome criterion6() {
  Outcome o;
  for (const auto& tc : table_cases()) {
    const CartanData& cd = cartan_data(tc.type);
    const Family f = cd.type().family;
    const int n = cd.rank();
    for (Sign s : {Sign::negative, Sign::positive}) {
      Realization m(cd, tc.r, s);
      std::string tag = std::string(tc.type) + " r=" + std::to_string(tc.r) + " " + sign_name(s);
      ShuffleElement fr = ShuffleElement::word(make_word({tc.r}));
      for (int k = 1; k <= 3; ++k) {
        Rat expected = (s == Sign::negative || k == 1) ? table_one(f, n, k) : Rat(0);
        ModuleVector got = m.e_imaginary(k, ModuleVector::vacuum());
        ModuleVector want = ModuleVector(fr) * Spectral::a_power(k, expected);
        std::string what = tag + " k=" + std::to_string(k) + ": E(1) expected " + expected.str();
        if (auto c = got.ratio_to(fr)) what += ", got " + c->str();
        o.expect(got == want, what);
      }
      ShuffleElement fr2 = m.algebra().product(fr, fr);
      Rat expected = table_two(f, n, s);
      ModuleVector got = m.e_imaginary(1, ModuleVector(fr));
      std::string what = tag + ": E(f_r)/f_r^2 expected a*(" + expected.str() + ")";
      if (auto c = got.ratio_to(fr2)) what += ", got " + c->str();
      o.expect(got == ModuleVector(fr2) * Spectral::a_power(1, expected), what);
    }
  }
  return o;
}

// ---------------------------------------------------------------- criterion 7

Outcome criterion7() {
  Outcome o;
  for (const auto& tc : table_cases()) {
    const CartanData& cd = cartan_data(tc.type);
    for (Sign s : {Sign::negative, Sign::positive}) {
      Realization m(cd, tc.r, s);
      std::string tag = std::string(tc.type) + " r=" + std::to_string(tc.r) + " " + sign_name(s);
      LWeightSeries lw = m.ell_weight(4);
      if (s == Sign::negative) {
        o.expect(lw.fit == FitKind::geometric, tag + ": fit " + fit_name(lw.fit));
        o.expect(lw.consistency, tag + ": ratio " + lw.ratio.str() + " differs from b(q_r^-3 - q_r^-1), b = " + lw.b.str());
        for (int k = 1; k + 1 <= 4; ++k)
          o.expect(lw.psi[k + 1] == lw.psi[k] * lw.ratio, tag + ": Psi_" + std::to_string(k + 1) + " not geometric");
      } else {
        o.expect(lw.fit == FitKind::linear, tag + ": fit " + fit_name(lw.fit));
        for (int k = 2; k <= 4; ++k) o.expect(lw.psi[k].is_zero(), tag + ": Psi_" + std::to_string(k) + " = " + lw.psi[k].str());
      }
      o.expect(lw.c_r.has_value() && !lw.c_r->is_zero(), tag + ": no c_r");
      for (int i = 1; i <= cd.rank(); ++i) {
        if (i == tc.r) continue;
        for (int k = 1; k <= 2; ++k)
          o.expect(m.psi_coefficient(i, k).is_zero(), tag + ": Psi_" + std::to_string(i) + "," + std::to_string(k) + " nonzero");
      }
    }
  }
  return o;
}

// ---------------------------------------------------------------- criterion 8

ShuffleElement random_element(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> letter(1, n), coef(-2, 2), exp(-3, 3), count(1, 3), len(1, max_len);
  ShuffleElement x;
  for (int t = count(rng); t > 0; --t) {
    Word w;
    for (int k = len(rng); k > 0; --k) w.push_back(static_cast<char>(letter(rng)));
    int c = coef(rng);
    x.add(w, Rat(Laurent::monomial(exp(rng), c == 0 ? 1 : c)));
  }
  return x;
}

ShuffleElement random_homogeneous(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> letter(1, n), exp(-3, 3);
  Word base;
  for (int k = 0; k < len; ++k) base.push_back(static_cast<char>(letter(rng)));
  ShuffleElement x;
  Word w = base;
  std::shuffle(w.begin(), w.end(), rng);
  x.add(w, Rat(Laurent::q(exp(rng))));
  std::shuffle(w.begin(), w.end(), rng);
  x.add(w, Rat(Laurent::monomial(exp(rng), 2)));
  return x;
}

bool all_zero(const Coords& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

void derive_adjacency(Outcome& o, const char* name, int r) {
  const CartanData& cd = cartan_data(name);
  ShuffleAlgebra alg(cd);
  RootVectors rv(alg, Alphabet::module_default(cd, r));
  for (const auto& beta : cd.positive_roots()) {
    if (beta[r - 1] != 1) continue;
    for (int i = 1; i <= cd.rank(); ++i) {
      bool edge = cd.finite_bilinear(cd.unit(i), beta) == 1 + (i == r ? 1 : 0);
      std::string tag = std::string(name) + " r=" + std::to_string(r) + " i=" + std::to_string(i) + " beta=" + coords_str(beta);
      Coords rest = beta;
      if (--rest[i - 1] < 0) {
        o.expect(!edge, tag + ": edge without room");
        continue;
      }
      if (all_zero(rest)) {
        bool nonzero = !rv.coefficient(beta, make_word({i})).is_zero();
        o.expect(nonzero == edge, tag);
        continue;
      }
      // the coefficients on good words determine an element of the shuffle subalgebra
      bool nonzero = false, equal = true;
      for (const Word& g : rv.lyndon().good_words(rest)) {
        Rat c = rv.coefficient(beta, g + static_cast<char>(i));
        if (!c.is_zero()) nonzero = true;
        if (edge && c != rv.coefficient(rest, g)) equal = false;
      }
      o.expect(nonzero == edge, tag + (edge ? ": missing edge" : ": extra edge"));
      if (edge) o.expect(equal, tag + ": e'_i F(beta) differs from F(beta - alpha_i)");
    }
  }
}

Outcome criterion8() {
  Outcome o;
  std::mt19937 rng(20240817);
  for (const char* name : {"A3", "C3"}) {
    const CartanData& cd = cartan_data(name);
    ShuffleAlgebra alg(cd);
    for (int t = 0; t < 40; ++t) {
      ShuffleElement x = random_element(rng, 3, 4), y = random_element(rng, 3, 4), z = random_element(rng, 3, 4);
      o.expect(alg.product(alg.product(x, y), z) == alg.product(x, alg.product(y, z)), std::string(name) + ": associativity");
    }
    for (int t = 0; t < 40; ++t) {
      ShuffleElement x = random_homogeneous(rng, 3, 1 + t % 4), y = random_element(rng, 3, 4);
      Coords wx = x.weight(3);
      for (int i = 1; i <= 3; ++i) {
        Rat twist(Laurent::q(-cd.finite_bilinear(cd.unit(i), wx)));
        ShuffleElement lhs = derive(i, alg.product(x, y));
        ShuffleElement rhs = alg.product(derive(i, x), y) + alg.product(x, derive(i, y)) * twist;
        o.expect(lhs == rhs, std::string(name) + ": twisted Leibniz");
      }
    }
  }
  for (const auto& [name, r] : std::vector<std::pair<const char*, int>>{
           {"E6", 1}, {"E6", 6}, {"E7", 7}, {"D4", 1}, {"D4", 4}, {"D5", 1}, {"D5", 5}})
    derive_adjacency(o, name, r);
  for (const auto& [name, r] : kSuite)
    for (Sign s : {Sign::negative, Sign::positive}) {
      Realization m(cartan_data(name), r, s);
      ClosureReport rep = m.closure_check(4);
      std::string tag = std::string(name) + " r=" + std::to_string(r) + " " + sign_name(s) + ": closure";
      if (!rep.failures.empty()) tag += " fails at e_" + std::to_string(rep.failures.front().i) + " (" + rep.failures.front().reason + ")";
      o.expect(rep.pass, tag);
    }
  return o;
}

const char* kTitles[] = {
    "",
    "rank-2 factorizations and inversion sets",
    "reduced-word tables",
    "character equality to depth 8",
    "B/C dual root vectors and their derivations",
    "Serre relations to depth 5",
    "affine root vector scalar tables",
    "l-weight closed forms",
    "property backstops",
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  if (argc > 1) {
    int k = std::atoi(argv[1]);
    if (k < 1 || k > 8) {
      std::cerr << "usage: acceptance [1-8]\n";
      return 2;
    }
    which.push_back(k);
  } else {
    for (int k = 1; k <= 8; ++k) which.push_back(k);
  }
  const std::function<Outcome()> runs[] = {nullptr,     criterion1, criterion2, criterion3, criterion4,
                                           criterion5, criterion6, criterion7, criterion8};
  bool all = true;
  for (int k : which) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = runs[k]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << kTitles[k] << " (" << o.checks
              << " checks, " << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s)\n";
    for (const auto& n : o.notes) std::cout << "  " << n << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
