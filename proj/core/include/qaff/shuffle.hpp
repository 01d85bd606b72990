// Quantum shuffle algebra over the finite alphabet {1..n}.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qaff/cartan.hpp"
#include "qaff/scalars.hpp"

namespace qaff {

/// A word stores letters 1..n as raw bytes.
using Word = std::string;

Word make_word(std::initializer_list<int> letters);
Word make_word(const std::vector<int>& letters);
std::vector<int> word_letters(const Word& w);
/// "1,2,3"; the empty word renders as "".
std::string word_str(const Word& w);
Word parse_word(const std::string& text);
Coords word_weight(const Word& w, int n);

/// Finitely supported linear combination of words.
class ShuffleElement {
 public:
  using Map = std::unordered_map<Word, Rat>;

  ShuffleElement() = default;
  static ShuffleElement word(const Word& w, const Rat& c = 1);
  /// The empty word.
  static ShuffleElement one() { return word(Word()); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rat coeff(const Word& w) const;
  /// Adds c to the coefficient of w, erasing it if it cancels.
  void add(const Word& w, const Rat& c);

  ShuffleElement& operator+=(const ShuffleElement& o);
  ShuffleElement& operator-=(const ShuffleElement& o);
  ShuffleElement& operator*=(const Rat& c);
  friend ShuffleElement operator+(ShuffleElement a, const ShuffleElement& b) { return a += b; }
  friend ShuffleElement operator-(ShuffleElement a, const ShuffleElement& b) { return a -= b; }
  friend ShuffleElement operator*(ShuffleElement a, const Rat& c) { return a *= c; }
  friend ShuffleElement operator*(const Rat& c, ShuffleElement a) { return a *= c; }
  friend bool operator==(const ShuffleElement& a, const ShuffleElement& b) { return a.terms_ == b.terms_; }

  /// Terms sorted by byte order of the words.
  std::vector<std::pair<Word, Rat>> sorted() const;
  /// Weight shared by all words; throws if the element is zero or inhomogeneous.
  Coords weight(int n) const;
  bool is_homogeneous(int n) const;
  /// Returns c with *this == c * other, or false.
  bool proportional_to(const ShuffleElement& other, Rat& c) const;

 private:
  Map terms_;
};

ShuffleElement concat(const ShuffleElement& x, const ShuffleElement& y);
/// Drops the last letter where it equals i; kills the other words.
ShuffleElement derive(int i, const ShuffleElement& x);

/// Shuffle of two words: the distinct result words with their coefficients.
using WordProduct = std::vector<std::pair<Word, Laurent>>;

/// Shuffle product bound to a Cartan datum. The word-pair memo is the only
/// mutable state; it is guarded for concurrent use and cleared when it grows
/// past its limit.
class ShuffleAlgebra {
 public:
  explicit ShuffleAlgebra(const CartanData& cd, std::size_t memo_limit = default_memo_limit());
  ShuffleAlgebra(const ShuffleAlgebra&) = delete;
  ShuffleAlgebra& operator=(const ShuffleAlgebra&) = delete;

  const CartanData& cartan() const { return cd_; }
  int rank() const { return cd_.rank(); }
  /// (alpha_a, alpha_b) for letters a, b.
  int letter_form(int a, int b) const { return form_[a][b]; }

  std::shared_ptr<const WordProduct> word_product(const Word& u, const Word& v) const;
  ShuffleElement product(const ShuffleElement& x, const ShuffleElement& y) const;
  ShuffleElement power(const ShuffleElement& x, int c) const;
  /// Coefficient of w in x * y without expanding the product.
  Rat product_coefficient(const ShuffleElement& x, const ShuffleElement& y, const Word& w) const;

  std::size_t memo_size() const;
  void clear_memo() const;
  /// QAFF_MEMO_LIMIT from the environment, default 200000 word pairs.
  static std::size_t default_memo_limit();

 private:
  const CartanData& cd_;
  std::vector<std::vector<int>> form_;
  std::size_t memo_limit_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::string, std::shared_ptr<const WordProduct>> memo_;
};

}  // namespace qaff
