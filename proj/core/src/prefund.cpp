#include "qaff/prefund.hpp"

#include <algorithm>
#include <functional>

#include "qaff/lazy.hpp"
#include "qaff/linalg.hpp"
#include "qaff/weyl.hpp"

namespace qaff {

namespace {

std::vector<int> up(int i, int j) {
  std::vector<int> o;
  for (int k = i; k <= j; ++k) o.push_back(k);
  return o;
}

std::vector<int> down(int i, int j) {
  std::vector<int> o;
  for (int k = i; k >= j; --k) o.push_back(k);
  return o;
}

void append(std::vector<int>& a, const std::vector<int>& b) { a.insert(a.end(), b.begin(), b.end()); }

Rat rat_pow(const Rat& x, int e) {
  Rat out = 1;
  for (int k = 0; k < e; ++k) out *= x;
  return out;
}

bool nonnegative(const Coords& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

std::vector<Word> words_of_weight(const Coords& gamma) {
  std::vector<Word> out;
  if (!nonnegative(gamma)) return out;
  Word w;
  for (std::size_t t = 0; t < gamma.size(); ++t) w.append(static_cast<std::size_t>(gamma[t]), static_cast<char>(t + 1));
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

class ThetaSource : public CoefficientSource {
 public:
  explicit ThetaSource(const Realization& r) : r_(r) {}
  Rat coeff(const Word& w) override { return r_.theta_coefficient(w); }

 private:
  const Realization& r_;
};

std::string sign_name(Sign s) { return s == Sign::negative ? "negative" : "positive"; }

Sign parse_sign(const std::string& s) {
  if (s == "neg" || s == "negative" || s == "-") return Sign::negative;
  if (s == "pos" || s == "positive" || s == "+") return Sign::positive;
  throw std::invalid_argument("unknown sign '" + s + "' (expected neg or pos)");
}

std::string fit_name(FitKind f) {
  switch (f) {
    case FitKind::geometric:
      return "geometric";
    case FitKind::linear:
      return "linear";
    default:
      return "other";
  }
}

// ModuleVector

ModuleVector::ModuleVector(ShuffleElement x, int a_power) { set(a_power, std::move(x)); }

void ModuleVector::set(int a_power, ShuffleElement x) {
  if (x.is_zero())
    parts_.erase(a_power);
  else
    parts_[a_power] = std::move(x);
}

ShuffleElement ModuleVector::part(int a_power) const {
  auto it = parts_.find(a_power);
  return it == parts_.end() ? ShuffleElement() : it->second;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [k, x] : o.parts_) set(k, part(k) + x);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [k, x] : o.parts_) set(k, part(k) - x);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Spectral& c) {
  ModuleVector out;
  for (const auto& [k, x] : parts_)
    for (const auto& [j, cj] : c.terms()) out += ModuleVector(x * cj, k + j);
  return *this = std::move(out);
}

std::optional<Spectral> ModuleVector::ratio_to(const ShuffleElement& base) const {
  if (base.is_zero()) return is_zero() ? std::optional<Spectral>(Spectral()) : std::nullopt;
  const auto& [w0, b0] = *base.terms().begin();
  Spectral c;
  for (const auto& [k, x] : parts_) {
    Rat ck = x.coeff(w0) / b0;
    if (!(base * ck == x)) return std::nullopt;
    c += Spectral::a_power(k, ck);
  }
  return c;
}

// Realization

Realization::Realization(const CartanData& cd, int r, Sign sign) : cd_(cd), r_(r), sign_(sign) {
  cd.check_index(r, false);
  const Family f = cd.type().family;
  if (f == Family::F || f == Family::G)
    throw UnsupportedCase("no cominuscule node in type " + cd.type().name());
  if (!cd.is_cominuscule(r))
    throw UnsupportedCase("node " + std::to_string(r) + " of " + cd.type().name() + " is not cominuscule");
  alg_ = std::make_unique<ShuffleAlgebra>(cd);
  rv_ = std::make_unique<RootVectors>(*alg_, Alphabet::module_default(cd, r));
  const Coords& th = cd.theta();
  const bool doubled = *std::max_element(th.begin(), th.end()) == 2;
  kappa_ = 1;
  if (f == Family::B && doubled) kappa_ = Rat(1, Laurent::q(-1) + Laurent::q(1));
  if (f == Family::C && doubled) kappa_ = Rat::q(1);
  tau0_ = factor_translation(cd, r).tau[0];
  for (const auto& beta : rv_->lyndon().roots_in_order())
    if (beta[r - 1] == 1) roots_.push_back(beta);
}

const ShuffleElement& Realization::theta_vector() const {
  std::call_once(x0_once_, [this] { x0_ = rv_->get(cd_.theta()) * kappa_; });
  return x0_;
}

Rat Realization::theta_coefficient(const Word& w) const { return rv_->coefficient(cd_.theta(), w) * kappa_; }

const ShuffleElement& Realization::normalized_power(const Coords& beta, int c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(beta, c);
  auto it = powers_.find(key);
  if (it != powers_.end()) return *it->second;
  const ShuffleElement& f = rv_->get(beta);
  ShuffleElement p = alg_->power(f, c);
  if (c >= 2) {
    const Word& l = rv_->lyndon().word(beta);
    Word lc;
    for (int k = 0; k < c; ++k) lc += l;
    Rat have = p.coeff(lc);
    if (have.is_zero()) throw LyndonError("power of a root vector misses its leading word");
    p *= rat_pow(f.coeff(l), c) / have;
  }
  auto ptr = std::make_shared<const ShuffleElement>(std::move(p));
  powers_.emplace(key, ptr);
  return *ptr;
}

ShuffleElement Realization::monomial(const std::vector<int>& exponents) const {
  if (exponents.size() != roots_.size()) throw std::invalid_argument("exponent vector has the wrong length");
  ShuffleElement x = ShuffleElement::one();
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (exponents[k] > 0) x = alg_->product(x, normalized_power(roots_[k], exponents[k]));
  return x;
}

std::vector<std::vector<int>> Realization::exponent_vectors_up_to(int depth) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(roots_.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int h) {
    if (k == roots_.size()) {
      out.push_back(cur);
      return;
    }
    const int hb = height(roots_[k]);
    for (int c = 0; h + c * hb <= depth; ++c) {
      cur[k] = c;
      rec(k + 1, h + c * hb);
    }
    cur[k] = 0;
  };
  rec(0, 0);
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    auto ht = [&](const std::vector<int>& e) {
      int h = 0;
      for (std::size_t k = 0; k < e.size(); ++k) h += e[k] * height(roots_[k]);
      return h;
    };
    return ht(a) < ht(b);
  });
  return out;
}

std::vector<std::vector<int>> Realization::exponent_vectors(const Coords& gamma) const {
  std::vector<std::vector<int>> out;
  if (!nonnegative(gamma)) return out;
  std::vector<int> cur(roots_.size(), 0);
  Coords rest = gamma;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == roots_.size()) {
      if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) out.push_back(cur);
      return;
    }
    const Coords& b = roots_[k];
    int c = 0;
    while (true) {
      cur[k] = c;
      rec(k + 1);
      bool fits = true;
      for (std::size_t t = 0; t < rest.size(); ++t) fits = fits && b[t] <= rest[t];
      if (!fits) break;
      for (std::size_t t = 0; t < rest.size(); ++t) rest[t] -= b[t];
      ++c;
    }
    for (std::size_t t = 0; t < rest.size(); ++t) rest[t] += c * b[t];
    cur[k] = 0;
  };
  rec(0);
  return out;
}

std::vector<ShuffleElement> Realization::basis_elements(int depth) const {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  std::vector<ShuffleElement> out;
  for (const auto& e : exponent_vectors_up_to(depth)) out.push_back(monomial(e));
  return out;
}

std::vector<ModuleVector> Realization::basis(int depth) const {
  std::vector<ModuleVector> out;
  for (auto& x : basis_elements(depth)) out.emplace_back(std::move(x));
  return out;
}

int Realization::k_exponent(int i, const Coords& ww) const {
  cd_.check_index(i, true);
  if (i == 0) return cd_.finite_bilinear(cd_.theta(), ww);
  return -cd_.finite_bilinear(cd_.unit(i), ww);
}

ShuffleElement Realization::e_plain(int i, const ShuffleElement& v) const {
  cd_.check_index(i, true);
  if (i != 0) return derive(i, v);
  if (v.is_zero()) return v;
  if (sign_ == Sign::negative) return alg_->product(theta_vector(), v);
  const int n = cd_.rank();
  ShuffleElement out;
  for (const auto& [w, c] : v.terms()) {
    ShuffleElement t = alg_->product(ShuffleElement::word(w, c), theta_vector());
    out += t * Rat::q(cd_.finite_bilinear(cd_.theta(), word_weight(w, n)));
  }
  return out;
}

ModuleVector Realization::act_e(int i, const ModuleVector& v) const {
  ModuleVector out;
  const int shift = i == 0 ? 1 : 0;
  for (const auto& [k, x] : v.parts()) out += ModuleVector(e_plain(i, x), k + shift);
  return out;
}

ModuleVector Realization::act_k(int i, const ModuleVector& v) const {
  const int n = cd_.rank();
  ModuleVector out;
  for (const auto& [k, x] : v.parts()) {
    ShuffleElement y;
    for (const auto& [w, c] : x.terms()) y.add(w, c.shifted(k_exponent(i, word_weight(w, n))));
    out += ModuleVector(y, k);
  }
  return out;
}

ShuffleElement Realization::apply_ops(const std::vector<int>& ops, const ShuffleElement& v) const {
  ShuffleElement x = v;
  for (auto it = ops.rbegin(); it != ops.rend() && !x.is_zero(); ++it) x = e_plain(*it, x);
  return x;
}

ModuleVector Realization::serre_defect(int i, int j, const ModuleVector& v) const {
  cd_.check_index(i, true);
  cd_.check_index(j, true);
  if (i == j) throw std::invalid_argument("Serre relation needs i != j");
  const int m = 1 - cd_.a(i, j);
  ModuleVector out;
  for (int k = 0; k <= m; ++k) {
    std::vector<int> ops(k, i);
    ops.push_back(j);
    ops.insert(ops.end(), m - k, i);
    ModuleVector x = v;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) x = act_e(*it, x);
    Rat c = q_binomial(m, k, cd_.d(i));
    if (k % 2) c = -c;
    out += x * Spectral(c);
  }
  return out;
}

bool Realization::serre_vanishes(int i, int j, const ShuffleElement& v) const {
  return serre_vanishes_with(i, j, v, std::make_shared<ExplicitSource>(theta_vector()));
}

bool Realization::serre_vanishes_with(int i, int j, const ShuffleElement& v,
                                      const std::shared_ptr<ExplicitSource>& x0) const {
  cd_.check_index(i, true);
  cd_.check_index(j, true);
  if (i == j) throw std::invalid_argument("Serre relation needs i != j");
  if (v.is_zero()) return true;
  const int n = cd_.rank();
  const int m = 1 - cd_.a(i, j);
  Coords gamma = v.weight(n);
  auto shift = [&](int letter, Coords& g) {
    if (letter == 0)
      for (int t = 0; t < n; ++t) g[t] += cd_.theta()[t];
    else
      --g[letter - 1];
  };
  shift(j, gamma);
  for (int k = 0; k < m; ++k) shift(i, gamma);
  if (!nonnegative(gamma)) return true;

  std::map<std::vector<int>, ShuffleElement> inner_cache;
  SumSource sum;
  for (int k = 0; k <= m; ++k) {
    std::vector<int> ops(k, i);
    ops.push_back(j);
    ops.insert(ops.end(), m - k, i);
    Rat c = q_binomial(m, k, cd_.d(i));
    if (k % 2) c = -c;
    auto zero = std::find(ops.begin(), ops.end(), 0);
    if (zero == ops.end()) {
      sum.add(c, std::make_shared<ExplicitSource>(apply_ops(ops, v)));
      continue;
    }
    // explicit below the leftmost e_0, lazy product at it, derivations above it
    std::vector<int> inner(zero + 1, ops.end());
    auto hit = inner_cache.find(inner);
    if (hit == inner_cache.end()) hit = inner_cache.emplace(inner, apply_ops(inner, v)).first;
    const ShuffleElement& z = hit->second;
    if (z.is_zero()) continue;
    if (!z.is_homogeneous(n)) throw std::logic_error("inhomogeneous intermediate vector");
    if (sign_ == Sign::positive) c *= Rat::q(cd_.finite_bilinear(cd_.theta(), z.weight(n)));
    std::shared_ptr<CoefficientSource> src = std::make_shared<ProductSource>(
        *alg_, x0, std::make_shared<ExplicitSource>(z), sign_ == Sign::negative);
    std::vector<int> outer(ops.begin(), zero);
    if (!outer.empty()) src = std::make_shared<DerivedSource>(make_word(outer), src);
    sum.add(c, src);
  }
  for (const Word& g : rv_->lyndon().good_words(gamma))
    if (!sum.coeff(g).is_zero()) return false;
  return true;
}

SerreReport Realization::serre_check(int depth, bool stop_at_first) const {
  SerreReport rep;
  const auto basis = basis_elements(depth);
  rep.basis_size = basis.size();
  auto x0 = std::make_shared<ExplicitSource>(theta_vector());
  const int n = cd_.rank();
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        ++rep.checks;
        if (serre_vanishes_with(i, j, basis[b], x0)) continue;
        rep.pass = false;
        rep.failures.push_back({i, j, b, serre_defect(i, j, ModuleVector(basis[b]))});
        if (stop_at_first) return rep;
      }
    }
  return rep;
}

EMonomial Realization::e_monomial() const {
  const int n = cd_.rank();
  const int r = r_;
  const Family f = cd_.type().family;
  EMonomial m;
  switch (f) {
    case Family::A:
      append(m.ops, up(r + 1, n));
      append(m.ops, down(r - 1, 1));
      m.prefactor = Rat::q(-(n - 1)) * Rat((n - 1) % 2 ? -1 : 1);
      break;
    case Family::B:
      append(m.ops, up(2, n));
      append(m.ops, down(n, 2));
      m.prefactor = Rat::q(-2 * n) * Rat(Laurent::q(-1) + Laurent::q(1));
      break;
    case Family::C:
      for (int k = n - 1; k >= 1; --k) m.ops.insert(m.ops.end(), {k, k});
      m.prefactor = rat_pow(Rat(Laurent::q(-1), Laurent::q(-1) + Laurent::q(1)), n - 1);
      break;
    case Family::D:
      if (r == 1) {
        append(m.ops, up(2, n - 1));
        m.ops.push_back(n);
      } else {
        append(m.ops, down(n - 2, 1));
        m.ops.push_back(r == n ? n - 1 : n);
      }
      append(m.ops, down(n - 2, 2));
      m.prefactor = Rat::q(-2 * n + 4);
      break;
    case Family::E:
      if (n == 6 && r == 1) {
        m.ops = {3, 4, 5, 6, 2, 4, 5, 3, 4, 2};
        m.prefactor = Rat::q(-10);
      } else if (n == 6 && r == 6) {
        m.ops = {5, 4, 3, 1, 2, 4, 3, 5, 4, 2};
        m.prefactor = Rat::q(-10);
      } else if (n == 7 && r == 7) {
        m.ops = {6, 5, 4, 2, 3, 1, 4, 5, 6, 3, 4, 5, 2, 4, 3, 1};
        m.prefactor = Rat::q(-16);
      } else {
        throw UnsupportedCase("no root vector formula for " + cd_.type().name());
      }
      break;
    default:
      throw UnsupportedCase("no root vector formula for " + cd_.type().name());
  }
  m.ops.push_back(0);
  return m;
}

ModuleVector Realization::e_imaginary(int k, const ModuleVector& v) const {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k == 1) {
    const Word fr = make_word({r_});
    for (const auto& [p, x] : v.parts())
      for (const auto& [w, c] : x.terms())
        if (!w.empty() && w != fr)
          throw std::invalid_argument("E_{delta-alpha_r} is only defined on span{1, f_r}");
    return e_imaginary_one(v);
  }
  auto c = v.ratio_to(ShuffleElement::one());
  if (!c) throw std::invalid_argument("E_{k delta-alpha_r} for k >= 2 is only defined on span{1}");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = e_imag_cache_.find(k);
    if (it != e_imag_cache_.end()) return it->second * *c;
  }
  const ModuleVector one = ModuleVector::vacuum();
  const ModuleVector ek = e_imaginary(k - 1, one);
  const Rat qr2 = Rat::q(-2 * cd_.d(r_));
  auto ea = [&](const ModuleVector& x) { return act_e(r_, x); };
  auto e1 = [&](const ModuleVector& x) { return e_imaginary(1, x); };
  auto em = [&](const ModuleVector& x) { return e_imaginary(k - 1, x); };
  ModuleVector s = e1(ea(ek));
  s -= ea(e1(ek)) * Spectral(qr2);
  s -= em(e1(ea(one)));
  s += em(ea(e1(one))) * Spectral(qr2);
  const Rat norm = -Rat(1, Laurent::q(cd_.d(r_)) + Laurent::q(-cd_.d(r_)));
  ModuleVector res = s * Spectral(norm);
  {
    std::lock_guard<std::mutex> lock(mu_);
    e_imag_cache_.emplace(k, res);
  }
  return res * *c;
}

// e_{o_1} ... e_{o_m} e_0 read through coefficients: the word w of the result
// is the coefficient of x_0 v (or v x_0) at w o_1 ... o_m, so x_0 is never expanded.
ModuleVector Realization::e_imaginary_one(const ModuleVector& v) const {
  const EMonomial m = e_monomial();
  const int n = cd_.rank();
  auto theta = std::make_shared<ThetaSource>(*this);
  const Word suffix = make_word(std::vector<int>(m.ops.begin(), m.ops.end() - 1));
  ModuleVector out;
  for (const auto& [k, x] : v.parts()) {
    std::map<Coords, ShuffleElement> components;
    for (const auto& [w, c] : x.terms()) components[word_weight(w, n)].add(w, c);
    for (const auto& [wt, y] : components) {
      Rat scale = m.prefactor;
      if (sign_ == Sign::positive) scale *= Rat::q(cd_.finite_bilinear(cd_.theta(), wt));
      ProductSource prod(*alg_, std::make_shared<ExplicitSource>(y), theta, sign_ == Sign::positive);
      Coords gamma = wt;
      for (int t = 0; t < n; ++t) gamma[t] += cd_.theta()[t];
      for (char ch : suffix) --gamma[static_cast<unsigned char>(ch) - 1];
      ShuffleElement res;
      for (const Word& w : words_of_weight(gamma)) {
        Rat c = prod.coeff(w + suffix);
        if (!c.is_zero()) res.add(w, c * scale);
      }
      out += ModuleVector(res, k + 1);
    }
  }
  return out;
}

Spectral Realization::psi_coefficient(int k) const {
  if (k == 0) return Spectral(1);
  const ModuleVector one = ModuleVector::vacuum();
  const int dr = cd_.d(r_);
  ModuleVector x = e_imaginary(k, act_e(r_, one));
  x -= act_e(r_, e_imaginary(k, one)) * Spectral(Rat::q(-2 * dr));
  x = act_k(r_, x) * Spectral(Rat::q(dr) - Rat::q(-dr));
  auto c = x.ratio_to(ShuffleElement::one());
  if (!c) throw std::logic_error("Psi does not act by a scalar on the vacuum");
  return *c;
}

Spectral Realization::psi_coefficient(int i, int k) const {
  cd_.check_index(i, false);
  if (i == r_) return psi_coefficient(k);
  if (k == 0) return Spectral(1);
  if (!exponent_vectors(cd_.unit(i)).empty())
    throw UnsupportedCase("weight space of alpha_" + std::to_string(i) + " is nonzero");
  return Spectral();
}

LWeightSeries Realization::ell_weight(int kmax) const {
  if (kmax < 1) throw std::invalid_argument("kmax must be positive");
  LWeightSeries s;
  for (int k = 0; k <= kmax; ++k) s.psi.push_back(psi_coefficient(k));
  auto b = act_e(r_, e_imaginary(1, ModuleVector::vacuum())).ratio_to(ShuffleElement::one());
  s.b = b ? *b : Spectral();
  const Spectral& p1 = s.psi[1];
  const bool p1_monomial = p1.terms().size() == 1;
  bool linear = !p1.is_zero();
  for (int k = 2; k <= kmax; ++k) linear = linear && s.psi[k].is_zero();
  if (linear) {
    s.fit = FitKind::linear;
    if (p1_monomial && p1.degree() == 1) s.c_r = -p1.coeff(1);
    return s;
  }
  if (!p1_monomial) return s;
  s.ratio = s.psi.size() > 2 ? s.psi[2].div_monomial(p1) : Spectral();
  bool geometric = !s.ratio.is_zero();
  for (int k = 1; k < kmax && geometric; ++k) geometric = s.psi[k + 1] == s.psi[k] * s.ratio;
  if (!geometric) return s;
  s.fit = FitKind::geometric;
  const int dr = cd_.d(r_);
  s.consistency = s.ratio == s.b * Spectral(Rat::q(-3 * dr) - Rat::q(-dr));
  if (s.ratio == p1 && p1.degree() == 1) s.c_r = p1.coeff(1);
  return s;
}

bool Realization::in_weight_span(const ShuffleElement& target, std::string& reason) const {
  const int n = cd_.rank();
  const Coords gamma = target.weight(n);
  const auto exps = exponent_vectors(gamma);
  if (exps.empty()) {
    reason = "no basis vector of weight (" + [&] {
      std::string s;
      for (std::size_t t = 0; t < gamma.size(); ++t) s += (t ? "," : "") + std::to_string(gamma[t]);
      return s;
    }() + ")";
    return false;
  }
  const auto words = rv_->lyndon().good_words(gamma);
  std::vector<std::vector<Rat>> cols;
  for (const auto& e : exps) {
    // right-nested lazy product, so no basis vector of this weight is expanded
    std::shared_ptr<CoefficientSource> src = std::make_shared<ExplicitSource>(ShuffleElement::one());
    for (std::size_t k = roots_.size(); k-- > 0;) {
      if (e[k] == 0) continue;
      auto fixed = std::make_shared<ExplicitSource>(normalized_power(roots_[k], e[k]));
      src = std::make_shared<ProductSource>(*alg_, fixed, src, true);
    }
    std::vector<Rat> col;
    col.reserve(words.size());
    for (const Word& g : words) col.push_back(src->coeff(g));
    cols.push_back(std::move(col));
  }
  std::vector<Rat> t;
  t.reserve(words.size());
  for (const Word& g : words) t.push_back(target.coeff(g));
  if (solve_in_span(cols, t).member) return true;
  reason = "not in the span of " + std::to_string(exps.size()) + " basis vectors";
  return false;
}

ClosureReport Realization::closure_check(int depth) const {
  ClosureReport rep;
  const auto basis = basis_elements(depth);
  rep.basis_size = basis.size();
  const int n = cd_.rank();
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (int i = 0; i <= n; ++i) {
      ++rep.checks;
      ShuffleElement t = e_plain(i, basis[b]);
      if (t.is_zero()) continue;
      std::string reason;
      if (!t.is_homogeneous(n)) {
        reason = "image is not homogeneous";
      } else if (in_weight_span(t, reason)) {
        continue;
      }
      rep.pass = false;
      rep.failures.push_back({i, b, reason});
    }
  return rep;
}

}  // namespace qaff
