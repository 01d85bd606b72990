#include "qaff/shuffle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

#include "qaff/lazy.hpp"

namespace qaff {

Word make_word(std::initializer_list<int> letters) { return make_word(std::vector<int>(letters)); }

Word make_word(const std::vector<int>& letters) {
  Word w;
  w.reserve(letters.size());
  for (int a : letters) {
    if (a < 1 || a > 127) throw std::invalid_argument("letter out of range: " + std::to_string(a));
    w.push_back(static_cast<char>(a));
  }
  return w;
}

std::vector<int> word_letters(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (char c : w) out.push_back(static_cast<unsigned char>(c));
  return out;
}

std::string word_str(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(static_cast<unsigned char>(w[k]));
  }
  return out;
}

Word parse_word(const std::string& text) {
  std::vector<int> letters;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad letter '" + item + "'");
    letters.push_back(v);
  }
  return make_word(letters);
}

Coords word_weight(const Word& w, int n) {
  Coords c(n, 0);
  for (char ch : w) {
    int a = static_cast<unsigned char>(ch);
    if (a < 1 || a > n) throw std::invalid_argument("letter " + std::to_string(a) + " outside alphabet");
    ++c[a - 1];
  }
  return c;
}

ShuffleElement ShuffleElement::word(const Word& w, const Rat& c) {
  ShuffleElement out;
  out.add(w, c);
  return out;
}

Rat ShuffleElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat() : it->second;
}

void ShuffleElement::add(const Word& w, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ShuffleElement& ShuffleElement::operator+=(const ShuffleElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

ShuffleElement& ShuffleElement::operator-=(const ShuffleElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

ShuffleElement& ShuffleElement::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::vector<std::pair<Word, Rat>> ShuffleElement::sorted() const {
  std::vector<std::pair<Word, Rat>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

Coords ShuffleElement::weight(int n) const {
  if (terms_.empty()) throw std::logic_error("weight of zero element");
  Coords w = word_weight(terms_.begin()->first, n);
  for (const auto& [u, c] : terms_)
    if (word_weight(u, n) != w) throw std::logic_error("element is not homogeneous");
  return w;
}

bool ShuffleElement::is_homogeneous(int n) const {
  if (terms_.empty()) return true;
  Coords w = word_weight(terms_.begin()->first, n);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return word_weight(t.first, n) == w; });
}

bool ShuffleElement::proportional_to(const ShuffleElement& other, Rat& c) const {
  if (other.is_zero()) {
    c = Rat();
    return is_zero();
  }
  if (is_zero()) {
    c = Rat();
    return true;
  }
  if (terms_.size() != other.terms_.size()) return false;
  const auto& [w0, v0] = *other.terms_.begin();
  Rat ratio = coeff(w0) / v0;
  if (ratio.is_zero()) return false;
  for (const auto& [w, v] : other.terms_)
    if (!(coeff(w) == v * ratio)) return false;
  c = ratio;
  return true;
}

ShuffleElement concat(const ShuffleElement& x, const ShuffleElement& y) {
  ShuffleElement out;
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) out.add(u + v, a * b);
  return out;
}

ShuffleElement derive(int i, const ShuffleElement& x) {
  ShuffleElement out;
  const char letter = static_cast<char>(i);
  for (const auto& [w, c] : x.terms())
    if (!w.empty() && w.back() == letter) out.add(w.substr(0, w.size() - 1), c);
  return out;
}

ShuffleAlgebra::ShuffleAlgebra(const CartanData& cd, std::size_t memo_limit) : cd_(cd), memo_limit_(memo_limit) {
  const int n = cd.rank();
  form_.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) form_[a][b] = cd.form(a, b);
}

std::size_t ShuffleAlgebra::default_memo_limit() {
  if (const char* env = std::getenv("QAFF_MEMO_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return 200000;
}

namespace {

struct ShuffleWalk {
  const std::vector<std::vector<int>>& form;
  const Word& u;
  const Word& v;
  int n;
  Word buf;
  std::unordered_map<Word, std::map<int, long>> acc;

  // pu[b] = sum of (alpha_a, alpha_b) over letters a of u already placed.
  void run(std::size_t i, std::size_t j, int exp, std::array<int, 16>& pu) {
    if (i == u.size() && j == v.size()) {
      ++acc[buf][exp];
      return;
    }
    if (i < u.size()) {
      int a = static_cast<unsigned char>(u[i]);
      std::array<int, 16> next = pu;
      for (int b = 1; b <= n; ++b) next[b] += form[a][b];
      buf.push_back(u[i]);
      run(i + 1, j, exp, next);
      buf.pop_back();
    }
    if (j < v.size()) {
      int b = static_cast<unsigned char>(v[j]);
      buf.push_back(v[j]);
      run(i, j + 1, exp - pu[b], pu);
      buf.pop_back();
    }
  }
};

}  // namespace

std::shared_ptr<const WordProduct> ShuffleAlgebra::word_product(const Word& u, const Word& v) const {
  std::string key;
  key.reserve(u.size() + v.size() + 1);
  key += u;
  key.push_back('\0');
  key += v;
  if (memo_limit_ > 0) {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  ShuffleWalk walk{form_, u, v, rank(), {}, {}};
  std::array<int, 16> pu{};
  walk.run(0, 0, 0, pu);
  auto out = std::make_shared<WordProduct>();
  out->reserve(walk.acc.size());
  for (auto& [w, exps] : walk.acc) {
    Laurent c;
    for (const auto& [e, k] : exps) c += Laurent::monomial(e, Rational(k));
    if (!c.is_zero()) out->emplace_back(w, std::move(c));
  }
  if (memo_limit_ > 0) {
    std::unique_lock lock(mu_);
    if (memo_.size() >= memo_limit_) memo_.clear();
    memo_.emplace(std::move(key), out);
  }
  return out;
}

ShuffleElement ShuffleAlgebra::product(const ShuffleElement& x, const ShuffleElement& y) const {
  ShuffleElement out;
  for (const auto& [u, a] : x.terms()) {
    for (const auto& [v, b] : y.terms()) {
      Rat ab = a * b;
      auto wp = word_product(u, v);
      for (const auto& [w, c] : *wp) out.add(w, ab * Rat(c));
    }
  }
  return out;
}

ShuffleElement ShuffleAlgebra::power(const ShuffleElement& x, int c) const {
  if (c < 0) throw std::invalid_argument("negative shuffle power");
  ShuffleElement out = ShuffleElement::one();
  for (int k = 0; k < c; ++k) out = product(out, x);
  return out;
}

Rat ShuffleAlgebra::product_coefficient(const ShuffleElement& x, const ShuffleElement& y, const Word& w) const {
  // Split x into homogeneous parts; the deshuffle walk needs a fixed weight.
  std::map<Coords, ShuffleElement> parts;
  for (const auto& [u, c] : x.terms()) parts[word_weight(u, rank())].add(u, c);
  auto other = std::make_shared<ExplicitSource>(y);
  Rat out;
  for (auto& [wt, part] : parts) {
    ProductSource src(*this, std::make_shared<ExplicitSource>(part), other, true);
    out += src.coeff(w);
  }
  return out;
}

std::size_t ShuffleAlgebra::memo_size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

void ShuffleAlgebra::clear_memo() const {
  std::unique_lock lock(mu_);
  memo_.clear();
}

}  // namespace qaff
