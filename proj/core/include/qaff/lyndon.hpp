// Lyndon words, good Lyndon words and dual root vectors in the shuffle model.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qaff/shuffle.hpp"

namespace qaff {

class LyndonError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Linear order on letters, smallest first.
class Alphabet {
 public:
  explicit Alphabet(std::vector<int> order);
  static Alphabet natural(int n);
  /// 1<..<n for B, n<..<1 for C, natural otherwise.
  static Alphabet type_default(const CartanData& cd);
  /// Order used for the module realization at node r: B and C keep their
  /// default; A, D, E put r first and the rest in natural order.
  static Alphabet module_default(const CartanData& cd, int r);

  const std::vector<int>& order() const { return order_; }
  int rank_of(int letter) const { return rank_[letter]; }
  /// Lexicographic order; a proper prefix is smaller.
  bool less(const Word& a, const Word& b) const;
  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.order_ == b.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> rank_;
};

bool is_lyndon(const Word& w, const Alphabet& order);
/// l = l1 l2 with l1 a proper Lyndon prefix of maximal length; throws
/// LyndonError for non-Lyndon words and single letters.
std::pair<Word, Word> costandard_factorization(const Word& l, const Alphabet& order);

/// Good Lyndon words by the inductive rule: l(alpha_i) = i and
/// l(beta) = max { l(b1) l(b2) : b1 + b2 = beta, l(b1) < l(b2) }.
class GoodLyndon {
 public:
  GoodLyndon(const CartanData& cd, Alphabet order);

  const Alphabet& alphabet() const { return order_; }
  const Word& word(const Coords& beta) const;
  std::optional<Coords> root_of(const Word& w) const;
  /// Positive roots in increasing order of their good Lyndon words.
  const std::vector<Coords>& roots_in_order() const { return sorted_; }
  /// Position of beta in roots_in_order().
  std::size_t position(const Coords& beta) const;
  /// Concatenations l_1 l_2 ... l_k of good Lyndon words with l_1 >= ... >= l_k and
  /// total weight gamma; these index a basis of the weight space.
  std::vector<Word> good_words(const Coords& gamma) const;

 private:
  const CartanData& cd_;
  Alphabet order_;
  std::map<Coords, Word> words_;
  std::map<Word, Coords> roots_;
  std::vector<Coords> sorted_;
};

std::map<Coords, Word> good_lyndon_words(const CartanData& cd, const Alphabet& order);

/// Dual root vectors F^up(beta). B and C use the closed formulas; A, D, E use
/// the q-bracket along the costandard factorization, normalized so that the
/// good Lyndon word has coefficient 1. Results are cached.
class RootVectors {
 public:
  RootVectors(const ShuffleAlgebra& alg, Alphabet order);

  const ShuffleAlgebra& algebra() const { return alg_; }
  const GoodLyndon& lyndon() const { return lyndon_; }
  const ShuffleElement& get(const Coords& beta) const;
  /// Coefficient of w in get(beta). For A, D, E it is read through the bracket
  /// recursion without expanding the vector.
  Rat coefficient(const Coords& beta, const Word& w) const;

 private:
  ShuffleElement compute(const Coords& beta) const;
  Rat bracket_coefficient(const Coords& beta, const Word& w) const;
  const ShuffleAlgebra& alg_;
  GoodLyndon lyndon_;
  mutable std::mutex mu_;
  mutable std::map<Coords, std::shared_ptr<const ShuffleElement>> cache_;
  mutable std::map<std::pair<Coords, Word>, Rat> coeff_memo_;
};

/// F^up(beta) for the type's default alphabet.
ShuffleElement dual_root_vector(const ShuffleAlgebra& alg, const Coords& beta);

/// Closed-form B and C vectors; throws for other families.
ShuffleElement dual_root_vector_bc(const CartanData& cd, const ShuffleAlgebra& alg, const Coords& beta);

/// F(b_j)*F(b_i) - q^{-(b_i,b_j)} F(b_i)*F(b_j) for b_i before b_j lies in the
/// span of ordered monomials in the roots strictly between them.
bool ls_straightening_check(const RootVectors& rv, const Coords& beta_i, const Coords& beta_j);

}  // namespace qaff
