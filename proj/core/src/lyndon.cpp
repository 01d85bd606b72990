#include "qaff/lyndon.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "qaff/linalg.hpp"

namespace qaff {

namespace {

std::string coords_str(const Coords& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + std::to_string(c[k]);
  return out;
}

Word range_word(int from, int to) {
  std::vector<int> letters;
  if (from <= to)
    for (int a = from; a <= to; ++a) letters.push_back(a);
  else
    for (int a = from; a >= to; --a) letters.push_back(a);
  return make_word(letters);
}

}  // namespace

Alphabet::Alphabet(std::vector<int> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  rank_.assign(n + 1, -1);
  for (int k = 0; k < n; ++k) {
    int a = order_[k];
    if (a < 1 || a > n || rank_[a] >= 0) throw LyndonError("alphabet order must be a permutation of 1..n");
    rank_[a] = k;
  }
}

Alphabet Alphabet::natural(int n) {
  std::vector<int> o(n);
  std::iota(o.begin(), o.end(), 1);
  return Alphabet(o);
}

Alphabet Alphabet::type_default(const CartanData& cd) {
  const int n = cd.rank();
  if (cd.type().family == Family::C) {
    std::vector<int> o;
    for (int a = n; a >= 1; --a) o.push_back(a);
    return Alphabet(o);
  }
  return natural(n);
}

Alphabet Alphabet::module_default(const CartanData& cd, int r) {
  cd.check_index(r, false);
  Family f = cd.type().family;
  if (f == Family::B || f == Family::C) return type_default(cd);
  std::vector<int> o{r};
  for (int a = 1; a <= cd.rank(); ++a)
    if (a != r) o.push_back(a);
  return Alphabet(o);
}

bool Alphabet::less(const Word& a, const Word& b) const {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < m; ++k) {
    int ra = rank_[static_cast<unsigned char>(a[k])];
    int rb = rank_[static_cast<unsigned char>(b[k])];
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

bool is_lyndon(const Word& w, const Alphabet& order) {
  if (w.empty()) return false;
  for (std::size_t s = 1; s < w.size(); ++s)
    if (!order.less(w, w.substr(s))) return false;
  return true;
}

std::pair<Word, Word> costandard_factorization(const Word& l, const Alphabet& order) {
  if (!is_lyndon(l, order)) throw LyndonError("word [" + word_str(l) + "] is not Lyndon");
  if (l.size() < 2) throw LyndonError("single letters have no costandard factorization");
  for (std::size_t k = l.size() - 1; k >= 1; --k)
    if (is_lyndon(l.substr(0, k), order)) return {l.substr(0, k), l.substr(k)};
  throw LyndonError("internal: no Lyndon prefix");
}

GoodLyndon::GoodLyndon(const CartanData& cd, Alphabet order) : cd_(cd), order_(std::move(order)) {
  const int n = cd.rank();
  if (static_cast<int>(order_.order().size()) != n) throw LyndonError("alphabet size does not match rank");
  for (const auto& beta : cd.positive_roots()) {
    if (height(beta) == 1) {
      int i = static_cast<int>(std::find(beta.begin(), beta.end(), 1) - beta.begin()) + 1;
      words_[beta] = make_word({i});
      continue;
    }
    std::optional<Word> best;
    for (const auto& b1 : cd.positive_roots()) {
      if (height(b1) >= height(beta)) break;
      Coords b2(n);
      bool ok = true;
      for (int k = 0; k < n; ++k) {
        b2[k] = beta[k] - b1[k];
        ok = ok && b2[k] >= 0;
      }
      if (!ok) continue;
      auto i1 = words_.find(b1);
      auto i2 = words_.find(b2);
      if (i1 == words_.end() || i2 == words_.end()) continue;
      if (!order_.less(i1->second, i2->second)) continue;
      Word cand = i1->second + i2->second;
      if (!best || order_.less(*best, cand)) best = cand;
    }
    if (!best) throw LyndonError("internal: no decomposition for root " + coords_str(beta));
    words_[beta] = *best;
  }
  for (const auto& [beta, w] : words_) {
    roots_[w] = beta;
    sorted_.push_back(beta);
  }
  std::sort(sorted_.begin(), sorted_.end(),
            [&](const Coords& a, const Coords& b) { return order_.less(words_.at(a), words_.at(b)); });
}

const Word& GoodLyndon::word(const Coords& beta) const {
  auto it = words_.find(beta);
  if (it == words_.end()) throw LyndonError("not a positive root: (" + coords_str(beta) + ")");
  return it->second;
}

std::optional<Coords> GoodLyndon::root_of(const Word& w) const {
  auto it = roots_.find(w);
  if (it == roots_.end()) return std::nullopt;
  return it->second;
}

std::size_t GoodLyndon::position(const Coords& beta) const {
  auto it = std::find(sorted_.begin(), sorted_.end(), beta);
  if (it == sorted_.end()) throw LyndonError("not a positive root: (" + coords_str(beta) + ")");
  return static_cast<std::size_t>(it - sorted_.begin());
}

std::vector<Word> GoodLyndon::good_words(const Coords& gamma) const {
  std::vector<Word> out;
  const std::size_t m = sorted_.size();
  Coords rest = gamma;
  Word buf;
  std::function<void(std::size_t)> rec = [&](std::size_t bound) {
    if (std::all_of(rest.begin(), rest.end(), [](int c) { return c == 0; })) {
      out.push_back(buf);
      return;
    }
    for (std::size_t k = bound; k-- > 0;) {
      const Coords& b = sorted_[k];
      bool fits = true;
      for (std::size_t t = 0; t < rest.size(); ++t) fits = fits && b[t] <= rest[t];
      if (!fits) continue;
      for (std::size_t t = 0; t < rest.size(); ++t) rest[t] -= b[t];
      const Word& l = words_.at(b);
      buf += l;
      rec(k + 1);
      buf.resize(buf.size() - l.size());
      for (std::size_t t = 0; t < rest.size(); ++t) rest[t] += b[t];
    }
  };
  if (std::any_of(gamma.begin(), gamma.end(), [](int c) { return c < 0; })) return out;
  rec(m);
  return out;
}

std::map<Coords, Word> good_lyndon_words(const CartanData& cd, const Alphabet& order) {
  GoodLyndon gl(cd, order);
  std::map<Coords, Word> out;
  for (const auto& b : gl.roots_in_order()) out[b] = gl.word(b);
  return out;
}

ShuffleElement dual_root_vector_bc(const CartanData& cd, const ShuffleAlgebra& alg, const Coords& beta) {
  if (!cd.is_root(beta)) throw LyndonError("not a positive root: (" + coords_str(beta) + ")");
  const int n = cd.rank();
  const Family f = cd.type().family;
  const int mx = *std::max_element(beta.begin(), beta.end());
  int first = 0, last = 0, first_two = 0;
  for (int k = n; k >= 1; --k)
    if (beta[k - 1] > 0) first = k;
  for (int k = 1; k <= n; ++k)
    if (beta[k - 1] > 0) last = k;
  for (int k = n; k >= 1; --k)
    if (beta[k - 1] == 2) first_two = k;
  if (f == Family::B) {
    if (mx == 1) return ShuffleElement::word(range_word(first, last));
    // alpha_i + ... + alpha_{j-1} + 2(alpha_j + ... + alpha_n)
    Laurent c = Laurent::q(-1) + Laurent::q(1);
    return ShuffleElement::word(range_word(first, n) + range_word(n, first_two), Rat(c));
  }
  if (f == Family::C) {
    if (mx == 1) return ShuffleElement::word(range_word(last, first));
    // w[n] (w[n-1..j] * w[n-1..k]) with j the first and k the first doubled index
    ShuffleElement x = ShuffleElement::word(range_word(n - 1, first));
    ShuffleElement y = ShuffleElement::word(range_word(n - 1, first_two));
    return concat(ShuffleElement::word(make_word({n})), alg.product(x, y));
  }
  throw LyndonError("closed-form dual root vectors exist only for types B and C");
}

RootVectors::RootVectors(const ShuffleAlgebra& alg, Alphabet order) : alg_(alg), lyndon_(alg.cartan(), std::move(order)) {}

const ShuffleElement& RootVectors::get(const Coords& beta) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(beta);
    if (it != cache_.end()) return *it->second;
  }
  auto val = std::make_shared<const ShuffleElement>(compute(beta));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(beta, val);
  return *it->second;
}

ShuffleElement RootVectors::compute(const Coords& beta) const {
  const CartanData& cd = alg_.cartan();
  const Family f = cd.type().family;
  if (f == Family::B || f == Family::C) return dual_root_vector_bc(cd, alg_, beta);
  if (f == Family::F || f == Family::G)
    throw LyndonError("dual root vectors are not available for type " + cd.type().name());
  const Word& l = lyndon_.word(beta);
  if (l.size() == 1) return ShuffleElement::word(l);
  auto [l1, l2] = costandard_factorization(l, lyndon_.alphabet());
  Coords b1 = word_weight(l1, cd.rank());
  Coords b2 = word_weight(l2, cd.rank());
  const ShuffleElement& f1 = get(b1);
  const ShuffleElement& f2 = get(b2);
  ShuffleElement x = alg_.product(f2, f1) - alg_.product(f1, f2) * Rat::q(-cd.finite_bilinear(b1, b2));
  Rat lead = x.coeff(l);
  if (lead.is_zero())
    throw LyndonError("q-bracket vanishes on the good Lyndon word of (" + coords_str(beta) + ")");
  x *= lead.inverse();
  return x;
}

Rat RootVectors::coefficient(const Coords& beta, const Word& w) const {
  const Family f = alg_.cartan().type().family;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(beta);
    if (it != cache_.end()) return it->second->coeff(w);
  }
  if (f != Family::A && f != Family::D && f != Family::E) return get(beta).coeff(w);
  const int n = alg_.rank();
  if (word_weight(w, n) != beta) return Rat();
  const Word& l = lyndon_.word(beta);
  if (l.size() == 1) return w == l ? Rat(1) : Rat();
  Rat lead = bracket_coefficient(beta, l);
  if (lead.is_zero())
    throw LyndonError("q-bracket vanishes on the good Lyndon word of (" + coords_str(beta) + ")");
  return bracket_coefficient(beta, w) / lead;
}

// Unnormalized bracket F(b2)*F(b1) - q^{-(b1,b2)} F(b1)*F(b2) at w, summed
// over the ways to split the positions of w between the two factors.
Rat RootVectors::bracket_coefficient(const Coords& beta, const Word& w) const {
  auto key = std::make_pair(beta, w);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = coeff_memo_.find(key);
    if (it != coeff_memo_.end()) return it->second;
  }
  const CartanData& cd = alg_.cartan();
  const int n = cd.rank();
  auto [l1, l2] = costandard_factorization(lyndon_.word(beta), lyndon_.alphabet());
  const Coords b1 = word_weight(l1, n);
  const Coords b2 = word_weight(l2, n);
  const int pair = cd.finite_bilinear(b1, b2);
  std::array<int, 16> need2{}, need1{};
  for (int a = 1; a <= n; ++a) need2[a] = b2[a - 1];
  for (int a = 1; a <= n; ++a) need1[a] = b1[a - 1];
  // s2/s1: letters given to the b2/b1 factor so far; e21: exponent of
  // F(b2)*F(b1), e12: exponent of F(b1)*F(b2).
  std::map<std::pair<Word, Word>, Laurent> groups;
  Word s2, s1;
  std::array<int, 16> p2{}, p1{};
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t pos, int e21, int e12) {
    if (pos == w.size()) {
      groups[{s2, s1}] += Laurent::q(e21) - Laurent::q(e12 - pair);
      return;
    }
    const int c = static_cast<unsigned char>(w[pos]);
    if (need2[c] > 0) {
      --need2[c];
      s2.push_back(w[pos]);
      for (int b = 1; b <= n; ++b) p2[b] += alg_.letter_form(c, b);
      rec(pos + 1, e21, e12 - p1[c]);
      for (int b = 1; b <= n; ++b) p2[b] -= alg_.letter_form(c, b);
      s2.pop_back();
      ++need2[c];
    }
    if (need1[c] > 0) {
      --need1[c];
      s1.push_back(w[pos]);
      for (int b = 1; b <= n; ++b) p1[b] += alg_.letter_form(c, b);
      rec(pos + 1, e21 - p2[c], e12);
      for (int b = 1; b <= n; ++b) p1[b] -= alg_.letter_form(c, b);
      s1.pop_back();
      ++need1[c];
    }
  };
  rec(0, 0, 0);
  Rat out;
  for (const auto& [split, factor] : groups) {
    if (factor.is_zero()) continue;
    Rat x = coefficient(b2, split.first);
    if (x.is_zero()) continue;
    Rat y = coefficient(b1, split.second);
    if (!y.is_zero()) out += Rat(factor) * x * y;
  }
  std::lock_guard<std::mutex> lock(mu_);
  coeff_memo_.emplace(key, out);
  return out;
}

ShuffleElement dual_root_vector(const ShuffleAlgebra& alg, const Coords& beta) {
  RootVectors rv(alg, Alphabet::type_default(alg.cartan()));
  return rv.get(beta);
}

bool ls_straightening_check(const RootVectors& rv, const Coords& beta_i, const Coords& beta_j) {
  const GoodLyndon& gl = rv.lyndon();
  const ShuffleAlgebra& alg = rv.algebra();
  const CartanData& cd = alg.cartan();
  std::size_t pi = gl.position(beta_i), pj = gl.position(beta_j);
  if (pi >= pj) throw LyndonError("ls_straightening_check needs beta_i strictly before beta_j");
  const ShuffleElement& fi = rv.get(beta_i);
  const ShuffleElement& fj = rv.get(beta_j);
  ShuffleElement x = alg.product(fj, fi) - alg.product(fi, fj) * Rat::q(-cd.finite_bilinear(beta_i, beta_j));

  const int n = cd.rank();
  Coords target(n);
  for (int k = 0; k < n; ++k) target[k] = beta_i[k] + beta_j[k];
  std::vector<Coords> between(gl.roots_in_order().begin() + static_cast<std::ptrdiff_t>(pi) + 1,
                              gl.roots_in_order().begin() + static_cast<std::ptrdiff_t>(pj));
  std::vector<ShuffleElement> monomials;
  Coords rest = target;
  std::function<void(std::size_t, ShuffleElement)> rec = [&](std::size_t k, ShuffleElement acc) {
    if (std::all_of(rest.begin(), rest.end(), [](int c) { return c == 0; })) {
      monomials.push_back(std::move(acc));
      return;
    }
    if (k == between.size()) return;
    rec(k + 1, acc);
    const Coords& b = between[k];
    int used = 0;
    for (;;) {
      bool fits = true;
      for (int t = 0; t < n; ++t) fits = fits && b[t] <= rest[t];
      if (!fits) break;
      for (int t = 0; t < n; ++t) rest[t] -= b[t];
      ++used;
      acc = alg.product(acc, rv.get(b));
      rec(k + 1, acc);
    }
    for (int t = 0; t < n; ++t) rest[t] += used * b[t];
  };
  rec(0, ShuffleElement::one());
  if (monomials.empty()) return x.is_zero();

  std::map<Word, std::size_t> index;
  auto note = [&](const ShuffleElement& e) {
    for (const auto& [w, c] : e.terms()) index.emplace(w, 0);
  };
  note(x);
  for (const auto& m : monomials) note(m);
  std::size_t k = 0;
  for (auto& [w, idx] : index) idx = k++;
  auto to_vec = [&](const ShuffleElement& e) {
    std::vector<Rat> v(index.size());
    for (const auto& [w, c] : e.terms()) v[index.at(w)] = c;
    return v;
  };
  std::vector<std::vector<Rat>> cols;
  for (const auto& m : monomials) cols.push_back(to_vec(m));
  return solve_in_span(cols, to_vec(x)).member;
}

}  // namespace qaff
